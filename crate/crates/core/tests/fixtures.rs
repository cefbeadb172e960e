//! The shipped fixture files match the graphs they are generated from.

use std::path::PathBuf;

use chibound::decomposition::clique_layering;
use chibound::gen::{planted_instance, PlantedKind};
use chibound::io::read_path;
use chibound::NamedGraph;

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

#[test]
fn named_fixtures_match() {
    for (file, g) in [
        ("grotzsch.edges", NamedGraph::Grotzsch),
        ("bull.edges", NamedGraph::Bull),
        ("diamond.edges", NamedGraph::Diamond),
        ("paw.edges", NamedGraph::Paw),
        ("c5.edges", NamedGraph::Cycle(5)),
        ("c7.edges", NamedGraph::Cycle(7)),
        ("k4.edges", NamedGraph::Complete(4)),
        ("prism4.edges", NamedGraph::Prism(4)),
        ("p6.edges", NamedGraph::Path(6)),
        ("chair.edges", NamedGraph::Chair),
    ] {
        assert_eq!(read_path(&path(file)).unwrap().0, g.build().unwrap(), "{file}");
    }
}

#[test]
fn planted_fixtures_match_and_keep_their_case() {
    for kind in PlantedKind::ALL {
        let inst = planted_instance(kind);
        let file = format!("planted/{}.edges", kind.name());
        let (g, text) = read_path(&path(&file)).unwrap();
        assert_eq!(g, inst.graph, "{file}");
        let clique_line = text.lines().find_map(|l| l.strip_prefix("# clique: ")).unwrap();
        let clique: Vec<usize> = clique_line.split_whitespace().map(|t| t.parse().unwrap()).collect();
        assert_eq!(clique, inst.clique);
        let l = clique_layering(&g, &g.set_of(clique)).unwrap();
        assert_eq!(l.case.tag(), inst.case.tag(), "{file}");
    }
}
