//! Regenerates `fixtures/`: named graphs as edge lists, and the planted
//! instances with their root clique, case and palette in comment lines.
//!
//! cargo run --example write_fixtures

use std::fs;
use std::path::Path;

use chibound::gen::{planted_instance, PlantedKind};
use chibound::io::write_edge_list;
use chibound::NamedGraph;

fn main() -> std::io::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    fs::create_dir_all(root.join("planted"))?;
    let named = [
        ("grotzsch", NamedGraph::Grotzsch),
        ("bull", NamedGraph::Bull),
        ("diamond", NamedGraph::Diamond),
        ("paw", NamedGraph::Paw),
        ("c5", NamedGraph::Cycle(5)),
        ("c7", NamedGraph::Cycle(7)),
        ("k4", NamedGraph::Complete(4)),
        ("prism4", NamedGraph::Prism(4)),
        ("p6", NamedGraph::Path(6)),
        ("chair", NamedGraph::Chair),
    ];
    for (name, g) in named {
        let g = g.build().expect("named graph parameters are valid");
        fs::write(root.join(format!("{name}.edges")), write_edge_list(&g))?;
    }
    for kind in PlantedKind::ALL {
        let inst = planted_instance(kind);
        let clique: Vec<String> = inst.clique.iter().map(usize::to_string).collect();
        let mut text = format!(
            "# planted: {}\n# clique: {}\n# case: {}\n# palette: {}\n",
            kind.name(),
            clique.join(" "),
            inst.case.tag(),
            inst.palette
        );
        text.push_str(&write_edge_list(&inst.graph));
        fs::write(root.join("planted").join(format!("{}.edges", kind.name())), text)?;
    }
    Ok(())
}
