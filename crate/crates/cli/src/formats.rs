//! Line-oriented text formats: matroids as explicit basis lists, sparse
//! paving matroids as non-basis lists, graphs as edge lists, and labelings
//! with optional forbidden values. Parse errors carry 1-based line numbers.

use gml_core::graph::{make_graphic, Graph};
use gml_core::group::{AbelianGroup, GroupElem};
use gml_core::labels::{ForbiddenSet, Labeling};
use gml_core::matroid::Matroid;
use gml_core::set::{subsets_lex, ElemSet};

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub msg: String,
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, msg: msg.into() })
}

/// One logical block of an input file.
#[derive(Debug, Clone)]
pub enum Section {
    Matroid(Matroid),
    Graph(Graph),
    Labels { labeling: Labeling, forbidden: Vec<GroupElem> },
}

impl Section {
    /// The matroid a section denotes, building graphic matroids on demand.
    pub fn to_matroid(&self) -> Option<Matroid> {
        match self {
            Section::Matroid(m) => Some(m.clone()),
            Section::Graph(g) => make_graphic(g).ok(),
            Section::Labels { .. } => None,
        }
    }
}

struct HeaderFields<'a> {
    line: usize,
    fields: Vec<(&'a str, &'a str)>,
}

impl<'a> HeaderFields<'a> {
    fn parse(line_no: usize, rest: &'a str) -> Result<HeaderFields<'a>, FormatError> {
        let mut fields = Vec::new();
        for tok in rest.split_whitespace() {
            match tok.split_once('=') {
                Some((k, v)) => fields.push((k, v)),
                None => return err(line_no, format!("expected key=value, got `{tok}`")),
            }
        }
        Ok(HeaderFields { line: line_no, fields })
    }

    fn get(&self, key: &str) -> Result<&'a str, FormatError> {
        self.fields
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or(FormatError { line: self.line, msg: format!("missing {key}=") })
    }

    fn get_usize(&self, key: &str) -> Result<usize, FormatError> {
        let raw = self.get(key)?;
        raw.parse().map_err(|_| FormatError {
            line: self.line,
            msg: format!("{key}= wants a nonnegative integer, got `{raw}`"),
        })
    }
}

fn parse_ids(line_no: usize, toks: &[&str]) -> Result<Vec<usize>, FormatError> {
    toks.iter()
        .map(|t| {
            t.parse::<usize>().map_err(|_| FormatError {
                line: line_no,
                msg: format!("expected an element id, got `{t}`"),
            })
        })
        .collect()
}

/// Group spec grammar: `Z`, `Zm:<m>`, or `prod:<spec>,<spec>,...` with the
/// component specs restricted to the first two forms.
pub fn parse_group_spec(line_no: usize, spec: &str) -> Result<AbelianGroup, FormatError> {
    fn atom(line_no: usize, s: &str) -> Result<AbelianGroup, FormatError> {
        if s == "Z" {
            return Ok(AbelianGroup::Integers);
        }
        if let Some(m) = s.strip_prefix("Zm:") {
            let m: u64 = m.parse().map_err(|_| FormatError {
                line: line_no,
                msg: format!("bad cyclic order `{m}`"),
            })?;
            if m == 0 {
                return err(line_no, "cyclic order must be positive");
            }
            return Ok(AbelianGroup::Cyclic(m));
        }
        err(line_no, format!("unknown group spec `{s}`"))
    }
    if let Some(body) = spec.strip_prefix("prod:") {
        let factors: Result<Vec<AbelianGroup>, FormatError> =
            body.split(',').map(|s| atom(line_no, s)).collect();
        let factors = factors?;
        if factors.is_empty() {
            return err(line_no, "empty product group");
        }
        return Ok(AbelianGroup::Product(factors));
    }
    atom(line_no, spec)
}

pub fn group_spec_string(group: &AbelianGroup) -> String {
    match group {
        AbelianGroup::Integers => "Z".to_string(),
        AbelianGroup::Cyclic(m) => format!("Zm:{m}"),
        AbelianGroup::Product(fs) => {
            let inner: Vec<String> = fs.iter().map(group_spec_string).collect();
            format!("prod:{}", inner.join(","))
        }
    }
}

/// Value grammar: an integer for Z, a residue for Zm, comma-separated
/// components for a product.
pub fn parse_group_value(
    line_no: usize,
    group: &AbelianGroup,
    tok: &str,
) -> Result<GroupElem, FormatError> {
    match group {
        AbelianGroup::Integers => tok.parse::<i64>().map(GroupElem::Int).map_err(|_| {
            FormatError { line: line_no, msg: format!("expected an integer, got `{tok}`") }
        }),
        AbelianGroup::Cyclic(m) => {
            let v: u64 = tok.parse().map_err(|_| FormatError {
                line: line_no,
                msg: format!("expected a residue, got `{tok}`"),
            })?;
            if v >= *m {
                return err(line_no, format!("residue {v} outside Zm:{m}"));
            }
            Ok(GroupElem::Cyclic(v))
        }
        AbelianGroup::Product(fs) => {
            let parts: Vec<&str> = tok.split(',').collect();
            if parts.len() != fs.len() {
                return err(
                    line_no,
                    format!("tuple has {} components, group has {}", parts.len(), fs.len()),
                );
            }
            let comps: Result<Vec<GroupElem>, FormatError> = fs
                .iter()
                .zip(parts)
                .map(|(g, p)| parse_group_value(line_no, g, p))
                .collect();
            Ok(GroupElem::Tuple(comps?))
        }
    }
}

pub fn group_value_string(v: &GroupElem) -> String {
    match v {
        GroupElem::Int(i) => i.to_string(),
        GroupElem::Cyclic(c) => c.to_string(),
        GroupElem::Tuple(parts) => {
            let inner: Vec<String> = parts.iter().map(group_value_string).collect();
            inner.join(",")
        }
    }
}

enum Building {
    Matroid { header_line: usize, n: usize, r: usize, bases: Vec<ElemSet> },
    SparsePaving { header_line: usize, n: usize, r: usize, non_bases: Vec<(usize, ElemSet)> },
    Graph { header_line: usize, v: usize, edges: Vec<(usize, usize)> },
    Labels {
        header_line: usize,
        group: AbelianGroup,
        values: Vec<(usize, usize, GroupElem)>,
        forbidden: Vec<GroupElem>,
    },
}

fn finish(b: Building) -> Result<Section, FormatError> {
    match b {
        Building::Matroid { header_line, n, r, bases } => {
            if bases.is_empty() {
                return err(header_line, "matroid block lists no bases");
            }
            for &b in &bases {
                if b.len() != r {
                    return err(header_line, format!("basis {:?} does not have {} elements", b.to_vec(), r));
                }
            }
            let m = Matroid::from_bases(n, bases)
                .map_err(|e| FormatError { line: header_line, msg: e.to_string() })?;
            Ok(Section::Matroid(m))
        }
        Building::SparsePaving { header_line, n, r, non_bases } => {
            if r == 0 || r > n {
                return err(header_line, format!("rank {r} out of range for n={n}"));
            }
            for (i, &(line_i, h)) in non_bases.iter().enumerate() {
                if h.len() != r {
                    return err(line_i, format!("non-basis has {} elements, rank is {}", h.len(), r));
                }
                for &(_, other) in &non_bases[..i] {
                    if h == other {
                        return err(line_i, "duplicate non-basis line");
                    }
                    if h.inter(other).len() + 2 > r {
                        return err(
                            line_i,
                            "non-bases intersect in more than rank-2 elements; not sparse paving",
                        );
                    }
                }
            }
            let bases: Vec<ElemSet> = subsets_lex(n, r)
                .filter(|s| non_bases.iter().all(|&(_, h)| h != *s))
                .collect();
            if bases.is_empty() {
                return err(header_line, "every rank-set is excluded; no bases remain");
            }
            let m = Matroid::from_bases(n, bases)
                .map_err(|e| FormatError { line: header_line, msg: e.to_string() })?;
            Ok(Section::Matroid(m))
        }
        Building::Graph { header_line, v, edges } => {
            let g = Graph::new(v, edges)
                .map_err(|e| FormatError { line: header_line, msg: e.to_string() })?;
            Ok(Section::Graph(g))
        }
        Building::Labels { header_line, group, values, forbidden } => {
            if values.is_empty() {
                return err(header_line, "labels block assigns no values");
            }
            let n = values.iter().map(|&(_, e, _)| e).max().unwrap() + 1;
            let mut slots: Vec<Option<GroupElem>> = vec![None; n];
            for (line_i, e, v) in values {
                if slots[e].is_some() {
                    return err(line_i, format!("element {e} labeled twice"));
                }
                slots[e] = Some(v);
            }
            let mut out = Vec::with_capacity(n);
            for (e, slot) in slots.into_iter().enumerate() {
                match slot {
                    Some(v) => out.push(v),
                    None => return err(header_line, format!("element {e} has no label")),
                }
            }
            let labeling = Labeling::new(group, out)
                .map_err(|e| FormatError { line: header_line, msg: e.to_string() })?;
            Ok(Section::Labels { labeling, forbidden })
        }
    }
}

/// Parses a whole file into its sections. Blank lines and `#` comments are
/// skipped anywhere.
pub fn parse_sections(text: &str) -> Result<Vec<Section>, FormatError> {
    let mut sections = Vec::new();
    let mut current: Option<Building> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (word, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match word {
            "matroid" | "sparsepaving" | "graph" | "labels" => {
                if let Some(b) = current.take() {
                    sections.push(finish(b)?);
                }
                current = Some(match word {
                    "matroid" => {
                        let h = HeaderFields::parse(line_no, rest)?;
                        Building::Matroid {
                            header_line: line_no,
                            n: h.get_usize("n")?,
                            r: h.get_usize("r")?,
                            bases: Vec::new(),
                        }
                    }
                    "sparsepaving" => {
                        let h = HeaderFields::parse(line_no, rest)?;
                        Building::SparsePaving {
                            header_line: line_no,
                            n: h.get_usize("n")?,
                            r: h.get_usize("r")?,
                            non_bases: Vec::new(),
                        }
                    }
                    "graph" => {
                        let h = HeaderFields::parse(line_no, rest)?;
                        Building::Graph {
                            header_line: line_no,
                            v: h.get_usize("v")?,
                            edges: Vec::new(),
                        }
                    }
                    _ => {
                        let h = HeaderFields::parse(line_no, rest)?;
                        let group = parse_group_spec(line_no, h.get("group")?)?;
                        Building::Labels {
                            header_line: line_no,
                            group,
                            values: Vec::new(),
                            forbidden: Vec::new(),
                        }
                    }
                });
            }
            "b" | "h" | "e" | "l" | "forbid" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                match (word, current.as_mut()) {
                    ("b", Some(Building::Matroid { n, bases, .. })) => {
                        let ids = parse_ids(line_no, &toks)?;
                        let set = check_ids(line_no, &ids, *n)?;
                        bases.push(set);
                    }
                    ("h", Some(Building::SparsePaving { n, non_bases, .. })) => {
                        let ids = parse_ids(line_no, &toks)?;
                        let set = check_ids(line_no, &ids, *n)?;
                        non_bases.push((line_no, set));
                    }
                    ("e", Some(Building::Graph { edges, .. })) => {
                        let ids = parse_ids(line_no, &toks)?;
                        if ids.len() != 2 {
                            return err(line_no, "edge line wants exactly two vertices");
                        }
                        edges.push((ids[0], ids[1]));
                    }
                    ("l", Some(Building::Labels { group, values, .. })) => {
                        if toks.len() != 2 {
                            return err(line_no, "label line wants `l <element> <value>`");
                        }
                        let e: usize = toks[0].parse().map_err(|_| FormatError {
                            line: line_no,
                            msg: format!("expected an element id, got `{}`", toks[0]),
                        })?;
                        let v = parse_group_value(line_no, group, toks[1])?;
                        values.push((line_no, e, v));
                    }
                    ("forbid", Some(Building::Labels { group, forbidden, .. })) => {
                        if toks.is_empty() {
                            return err(line_no, "forbid line lists no values");
                        }
                        for t in &toks {
                            forbidden.push(parse_group_value(line_no, group, t)?);
                        }
                    }
                    _ => {
                        return err(line_no, format!("`{word}` line outside its section"));
                    }
                }
            }
            other => return err(line_no, format!("unknown directive `{other}`")),
        }
    }
    if let Some(b) = current.take() {
        sections.push(finish(b)?);
    }
    if sections.is_empty() {
        return err(1, "file contains no sections");
    }
    Ok(sections)
}

fn check_ids(line_no: usize, ids: &[usize], n: usize) -> Result<ElemSet, FormatError> {
    let mut set = ElemSet::EMPTY;
    let mut last: Option<usize> = None;
    for &e in ids {
        if e >= n {
            return err(line_no, format!("element {e} outside ground set of size {n}"));
        }
        if let Some(p) = last {
            if e <= p {
                return err(line_no, "element ids must be strictly ascending");
            }
        }
        last = Some(e);
        set = set.insert(e);
    }
    Ok(set)
}

fn ids_line(prefix: &str, s: ElemSet, out: &mut String) {
    out.push_str(prefix);
    for e in s.iter() {
        let _ = write!(out, " {e}");
    }
    out.push('\n');
}

pub fn write_matroid(m: &Matroid) -> String {
    let mut rows: Vec<Vec<usize>> = m.bases().iter().map(|b| b.to_vec()).collect();
    rows.sort();
    let mut out = format!("matroid n={} r={}\n", m.n(), m.rank());
    for row in rows {
        out.push('b');
        for e in row {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
    }
    out
}

/// Emits the complement form: all rank-sets not listed as bases. The caller
/// is responsible for m actually being sparse paving.
pub fn write_sparse_paving(m: &Matroid) -> String {
    let mut out = format!("sparsepaving n={} r={}\n", m.n(), m.rank());
    for s in subsets_lex(m.n(), m.rank()) {
        if !m.is_basis(s) {
            ids_line("h", s, &mut out);
        }
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph v={}\n", g.v);
    for &(a, b) in &g.edges {
        let _ = writeln!(out, "e {a} {b}");
    }
    out
}

pub fn write_labels(labeling: &Labeling, forbidden: &[GroupElem]) -> String {
    let mut out = format!("labels group={}\n", group_spec_string(labeling.group()));
    for (e, v) in labeling.values().iter().enumerate() {
        let _ = writeln!(out, "l {e} {}", group_value_string(v));
    }
    if !forbidden.is_empty() {
        out.push_str("forbid");
        for v in forbidden {
            let _ = write!(out, " {}", group_value_string(v));
        }
        out.push('\n');
    }
    out
}

/// Exactly one matroid-denoting section and one labels section, combined
/// into a proximity instance.
pub fn proximity_instance(
    sections: &[Section],
) -> Result<gml_core::proximity::LabeledInstance, String> {
    let mut matroid: Option<Matroid> = None;
    let mut labels: Option<(&Labeling, &[GroupElem])> = None;
    for s in sections {
        match s {
            Section::Labels { labeling, forbidden } => {
                if labels.is_some() {
                    return Err("more than one labels section".into());
                }
                labels = Some((labeling, forbidden));
            }
            other => {
                if matroid.is_some() {
                    return Err("more than one matroid section".into());
                }
                matroid = other.to_matroid();
                if matroid.is_none() {
                    return Err("graph section does not define a matroid".into());
                }
            }
        }
    }
    let m = matroid.ok_or("no matroid section")?;
    let (psi, forbidden) = labels.ok_or("no labels section")?;
    let f = ForbiddenSet::new(psi.group().clone(), forbidden.to_vec())
        .map_err(|e| e.to_string())?;
    gml_core::proximity::LabeledInstance::new(m, psi.clone(), f).map_err(|e| e.to_string())
}

/// One matroid section plus one labels section per constraint, each with
/// exactly one forbidden value.
pub fn multi_instance(
    sections: &[Section],
) -> Result<gml_core::multilabel::MultiLabelInstance, String> {
    let mut matroid: Option<Matroid> = None;
    let mut constraints = Vec::new();
    for s in sections {
        match s {
            Section::Labels { labeling, forbidden } => {
                if forbidden.len() != 1 {
                    return Err(format!(
                        "each constraint wants exactly one forbidden value, got {}",
                        forbidden.len()
                    ));
                }
                constraints.push(
                    gml_core::multilabel::LabelConstraint::new(
                        labeling.clone(),
                        forbidden[0].clone(),
                    )
                    .map_err(|e| e.to_string())?,
                );
            }
            other => {
                if matroid.is_some() {
                    return Err("more than one matroid section".into());
                }
                matroid = other.to_matroid();
                if matroid.is_none() {
                    return Err("graph section does not define a matroid".into());
                }
            }
        }
    }
    let m = matroid.ok_or("no matroid section")?;
    if constraints.is_empty() {
        return Err("no labels sections".into());
    }
    gml_core::multilabel::MultiLabelInstance::new(m, constraints).map_err(|e| e.to_string())
}

/// Comma- or whitespace-separated element ids, order preserved.
pub fn parse_id_list(raw: &str) -> Result<Vec<usize>, String> {
    let toks: Vec<&str> =
        raw.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
    if toks.is_empty() {
        return Err("empty id list".into());
    }
    toks.iter()
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad element id `{t}`")))
        .collect()
}

pub fn fmt_ids(s: ElemSet) -> String {
    let parts: Vec<String> = s.iter().map(|e| e.to_string()).collect();
    parts.join(",")
}

pub fn fmt_seq(ids: &[usize]) -> String {
    let parts: Vec<String> = ids.iter().map(|e| e.to_string()).collect();
    parts.join(",")
}
