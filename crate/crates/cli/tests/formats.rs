use gml_cli::formats::{
    fmt_ids, fmt_seq, group_spec_string, group_value_string, multi_instance, parse_group_spec,
    parse_group_value, parse_id_list, parse_sections, proximity_instance, write_graph,
    write_labels, write_matroid, write_sparse_paving, Section,
};

use gml_core::gen::{random_labeling, random_sparse_paving};
use gml_core::graph::{make_r10, Graph};
use gml_core::group::{AbelianGroup, GroupElem};
use gml_core::matroid::Matroid;
use gml_core::rng::Rng;
use gml_core::set::ElemSet;

fn only_matroid(text: &str) -> Matroid {
    let sections = parse_sections(text).unwrap();
    assert_eq!(sections.len(), 1);
    sections[0].to_matroid().unwrap()
}

#[test]
fn matroid_sections_round_trip() {
    for m in [
        Matroid::make_uniform(2, 4).unwrap(),
        Matroid::make_uniform(3, 6).unwrap(),
        make_r10(),
    ] {
        let text = write_matroid(&m);
        let back = only_matroid(&text);
        assert_eq!(back.n(), m.n());
        assert_eq!(back.rank(), m.rank());
        assert_eq!(back.bases(), m.bases());
        // writing again reproduces the bytes
        assert_eq!(write_matroid(&back), text);
    }
}

#[test]
fn sparse_paving_sections_round_trip() {
    let mut rng = Rng::new(5);
    for _ in 0..10 {
        let m = random_sparse_paving(&mut rng, 3, 7).unwrap();
        let text = write_sparse_paving(&m);
        let back = only_matroid(&text);
        assert_eq!(back.bases(), m.bases());
        assert_eq!(write_sparse_paving(&back), text);
    }
}

#[test]
fn graph_sections_build_cycle_matroids() {
    let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    let text = write_graph(&g);
    assert_eq!(text, "graph v=3\ne 0 1\ne 1 2\ne 0 2\n");
    let sections = parse_sections(&text).unwrap();
    let m = sections[0].to_matroid().unwrap();
    assert_eq!(m.rank(), 2);
    assert_eq!(m.num_bases(), 3);
}

#[test]
fn labels_sections_round_trip_every_group_shape() {
    let groups = [
        AbelianGroup::Integers,
        AbelianGroup::Cyclic(4),
        AbelianGroup::Product(vec![AbelianGroup::Integers, AbelianGroup::Cyclic(3)]),
    ];
    let mut rng = Rng::new(6);
    for group in groups {
        let psi = random_labeling(&mut rng, &group, 5);
        let forbidden = vec![psi.value(0).clone(), psi.value(3).clone()];
        let text = write_labels(&psi, &forbidden);
        let sections = parse_sections(&text).unwrap();
        match &sections[0] {
            Section::Labels { labeling, forbidden: back } => {
                assert_eq!(labeling.group(), &group);
                assert_eq!(labeling.values(), psi.values());
                assert_eq!(back, &forbidden);
            }
            other => panic!("wrong section: {other:?}"),
        }
        assert_eq!(
            write_labels(&psi, &forbidden),
            text
        );
    }
}

#[test]
fn negative_integer_labels_survive() {
    let text = "labels group=Z\nl 0 -7\nl 1 3\nforbid -4\n";
    let sections = parse_sections(text).unwrap();
    match &sections[0] {
        Section::Labels { labeling, forbidden } => {
            assert_eq!(labeling.value(0), &GroupElem::Int(-7));
            assert_eq!(forbidden[0], GroupElem::Int(-4));
        }
        other => panic!("wrong section: {other:?}"),
    }
}

#[test]
fn tuple_values_parse_and_print() {
    let group =
        parse_group_spec(1, "prod:Z,Zm:5").unwrap();
    assert_eq!(group_spec_string(&group), "prod:Z,Zm:5");
    let v = parse_group_value(1, &group, "-2,4").unwrap();
    assert_eq!(v, GroupElem::Tuple(vec![GroupElem::Int(-2), GroupElem::Cyclic(4)]));
    assert_eq!(group_value_string(&v), "-2,4");
    assert!(parse_group_value(1, &group, "1").is_err());
    assert!(parse_group_value(1, &group, "1,9").is_err());
    assert!(parse_group_spec(1, "prod:").is_err());
    assert!(parse_group_spec(1, "Zm:0").is_err());
    assert!(parse_group_spec(1, "Q").is_err());
}

#[test]
fn sections_split_on_headers_and_skip_comments() {
    let text = "\n# instance\nmatroid n=4 r=2\nb 0 1\nb 0 2\nb 1 2\n\nlabels group=Zm:2\nl 0 0\nl 1 1\nl 2 0\nl 3 1\nforbid 0\n";
    let sections = parse_sections(text).unwrap();
    assert_eq!(sections.len(), 2);
    assert!(matches!(sections[0], Section::Matroid(_)));
    assert!(matches!(sections[1], Section::Labels { .. }));
    let inst = proximity_instance(&sections[..]).unwrap();
    assert_eq!(inst.forbidden().len(), 1);
}

#[test]
fn errors_carry_the_offending_line_number() {
    let cases: &[(&str, usize, &str)] = &[
        ("matroid n=4\nb 0 1\n", 1, "missing r="),
        ("matroid n=4 r=x\n", 1, "nonnegative integer"),
        ("b 0 1\n", 1, "outside its section"),
        ("matroid n=4 r=2\nb 1 0\n", 2, "strictly ascending"),
        ("matroid n=4 r=2\nb 0 5\n", 2, "outside ground set"),
        ("matroid n=4 r=2\nb 0 1\nb 0 1 2\n", 1, "does not have 2 elements"),
        ("matroid n=4 r=2\n", 1, "lists no bases"),
        ("sparsepaving n=5 r=2\nh 0 1\nh 0 1\n", 3, "duplicate"),
        ("sparsepaving n=5 r=3\nh 0 1 2\nh 0 1 3\n", 3, "not sparse paving"),
        ("graph v=3\ne 0\n", 2, "exactly two vertices"),
        ("labels group=Zm:3\nl 0 0\nl 0 1\n", 3, "labeled twice"),
        ("labels group=Zm:3\nl 0 0\nl 2 1\n", 1, "element 1 has no label"),
        ("labels group=Zm:3\nl 0 7\n", 2, "outside"),
        ("labels group=Zm:3\nforbid\n", 2, "no values"),
        ("widget n=1\n", 1, "unknown directive"),
        ("", 1, "no sections"),
        ("# only a comment\n", 1, "no sections"),
    ];
    for &(text, line, needle) in cases {
        let e = parse_sections(text).expect_err(text);
        assert_eq!(e.line, line, "input {text:?} reported line {} ({})", e.line, e.msg);
        assert!(e.msg.contains(needle), "input {text:?} message {:?}", e.msg);
    }
}

#[test]
fn sparse_paving_exclusion_list_builds_the_complement() {
    let text = "sparsepaving n=4 r=2\nh 0 1\n";
    let m = only_matroid(text);
    assert_eq!(m.num_bases(), 5);
    assert!(!m.is_basis(ElemSet::from_iter([0, 1])));
    assert!(m.is_sparse_paving());
}

#[test]
fn instance_assembly_rejects_wrong_section_counts() {
    let m = write_matroid(&Matroid::make_uniform(2, 4).unwrap());
    let labels = "labels group=Zm:2\nl 0 0\nl 1 1\nl 2 0\nl 3 1\nforbid 0\n";
    let two_matroids = parse_sections(&format!("{m}{m}{labels}"));
    assert!(two_matroids.is_ok());
    assert!(proximity_instance(&two_matroids.unwrap()).is_err());

    let no_labels = parse_sections(&m).unwrap();
    assert!(proximity_instance(&no_labels).is_err());

    let sections = parse_sections(&format!("{m}{labels}")).unwrap();
    assert!(proximity_instance(&sections).is_ok());
    // the same sections work as a one-constraint multi instance
    assert_eq!(multi_instance(&sections).unwrap().k(), 1);

    let two_forbids = "labels group=Zm:2\nl 0 0\nl 1 1\nl 2 0\nl 3 1\nforbid 0 1\n";
    let sections = parse_sections(&format!("{m}{two_forbids}")).unwrap();
    assert!(multi_instance(&sections).is_err());
}

#[test]
fn size_mismatch_between_sections_is_reported() {
    let m = write_matroid(&Matroid::make_uniform(2, 4).unwrap());
    let labels = "labels group=Zm:2\nl 0 0\nl 1 1\nl 2 0\nforbid 0\n";
    let sections = parse_sections(&format!("{m}{labels}")).unwrap();
    assert!(proximity_instance(&sections).is_err());
}

#[test]
fn id_lists_accept_commas_and_whitespace() {
    assert_eq!(parse_id_list("3,1,2").unwrap(), vec![3, 1, 2]);
    assert_eq!(parse_id_list("3 1 2").unwrap(), vec![3, 1, 2]);
    assert_eq!(parse_id_list(" 3, 1 ,2 ").unwrap(), vec![3, 1, 2]);
    assert!(parse_id_list("").is_err());
    assert!(parse_id_list("a").is_err());
    assert_eq!(fmt_ids(ElemSet::from_iter([2, 0, 5])), "0,2,5");
    assert_eq!(fmt_seq(&[3, 1, 2]), "3,1,2");
}

#[test]
fn matroid_writer_orders_rows_lexicographically() {
    // {0,3} sorts before {1,2} by id sequence even though its mask is larger
    let m = Matroid::make_uniform(2, 4).unwrap();
    let text = write_matroid(&m);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows, vec!["b 0 1", "b 0 2", "b 0 3", "b 1 2", "b 1 3", "b 2 3"]);
}
