use std::collections::BTreeSet;
use std::process::Command;

use hivenet::network::gamma0;
use hivenet::{PlanarNetwork, Weighting};
use hivenet_cli::format::{write_json, MultipathFile, NetworkFile};
use hivenet_cli::render::{render, Format, RenderOptions};
use hivenet::weight::int;

fn parse_svg(text: &str) -> roxmltree::Document<'_> {
    let doc = roxmltree::Document::parse(text).expect("well-formed XML");
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    doc
}

fn stroked_red(doc: &roxmltree::Document<'_>) -> BTreeSet<String> {
    doc.descendants()
        .filter(|n| n.tag_name().name() == "polyline" && n.attribute("stroke") == Some("#d62728"))
        .map(|n| n.attribute("id").unwrap().to_string())
        .collect()
}

#[test]
fn intro_network_with_its_heaviest_path() {
    let net = hivenet::fixtures::intro_net();
    let w = hivenet::fixtures::intro_weights(&net);
    let opts = RenderOptions {
        weights: Some(&w),
        highlight: hivenet::fixtures::intro_red_path().into_iter().collect(),
        edge_ids: false,
    };
    let text = render(&net, &opts, Format::Svg);
    let doc = parse_svg(&text);
    let expected: BTreeSet<String> = hivenet::fixtures::intro_red_path().iter().map(|e| format!("e{e}")).collect();
    assert_eq!(stroked_red(&doc), expected);
    let polylines = doc.descendants().filter(|n| n.tag_name().name() == "polyline").count();
    let circles = doc.descendants().filter(|n| n.tag_name().name() == "circle").count();
    assert_eq!((polylines, circles), (net.edges().len(), net.vertices().len()));
    let labels: Vec<&str> = doc.descendants().filter(|n| n.tag_name().name() == "text").filter_map(|n| n.text()).collect();
    assert_eq!(labels.len(), net.edges().len());
    assert!(labels.contains(&"-1"));
    assert_eq!(text, render(&net, &opts, Format::Svg));
}

#[test]
fn horizontal_lines_keep_their_height() {
    let net = hivenet::network::delta0(3).unwrap();
    let doc_text = render(&net, &RenderOptions::default(), Format::Svg);
    let doc = parse_svg(&doc_text);
    for line in doc.descendants().filter(|n| n.tag_name().name() == "polyline") {
        let ys: BTreeSet<&str> =
            line.attribute("points").unwrap().split(' ').map(|p| p.split_once(',').unwrap().1).collect();
        assert_eq!(ys.len(), 1);
    }
}

#[test]
fn empty_network_renders_an_empty_canvas() {
    let net = PlanarNetwork::new(int(0), int(1), vec![], vec![]).unwrap();
    let doc_text = render(&net, &RenderOptions::default(), Format::Svg);
    let doc = parse_svg(&doc_text);
    assert_eq!(doc.descendants().filter(|n| n.tag_name().name() == "polyline").count(), 0);
    let dot = render(&net, &RenderOptions::default(), Format::Dot);
    assert!(dot.starts_with("digraph") && dot.trim_end().ends_with('}'));
}

#[test]
fn dot_output_lists_each_edge_once() {
    let net = gamma0(4).unwrap();
    let w = Weighting::zero(&net);
    let opts = RenderOptions { weights: Some(&w), highlight: [0, 1].into_iter().collect(), edge_ids: false };
    let dot = render(&net, &opts, Format::Dot);
    assert_eq!(dot.matches(" -> ").count(), net.edges().len());
    assert_eq!(dot.matches("color=red").count(), 2);
    for e in net.edges() {
        assert!(dot.contains(&format!("v{} -> v{}", e.tail, e.head)));
    }
}

#[test]
fn render_command_is_idempotent() {
    let tmp = tempfile::TempDir::new().unwrap();
    let d = tmp.path();
    let bin = env!("CARGO_BIN_EXE_hivenet");
    let run = |args: &[&str]| {
        let status = Command::new(bin).current_dir(d).args(args).output().unwrap().status;
        assert!(status.success(), "{args:?}");
    };
    run(&["gen", "gamma0", "--n", "6", "-o", "g.json"]);
    let staircase = hivenet::collections::Staircase::gamma0(6).unwrap();
    write_json(&d.join("alpha.json"), &MultipathFile { paths: staircase.alpha(4, 2) }).unwrap();
    run(&["render", "--net", "g.json", "--highlight", "alpha.json", "-o", "a.svg"]);
    run(&["render", "--net", "g.json", "--highlight", "alpha.json", "-o", "b.svg"]);
    let a = std::fs::read(d.join("a.svg")).unwrap();
    assert_eq!(a, std::fs::read(d.join("b.svg")).unwrap());
    let text = String::from_utf8(a).unwrap();
    let doc = parse_svg(&text);
    let net: NetworkFile = serde_json::from_str(&std::fs::read_to_string(d.join("g.json")).unwrap()).unwrap();
    let highlighted: BTreeSet<String> = staircase.alpha(4, 2).into_iter().flatten().map(|e| format!("e{e}")).collect();
    assert_eq!(stroked_red(&doc), highlighted);
    assert_eq!(doc.descendants().filter(|n| n.tag_name().name() == "polyline").count(), net.edges.len());
    run(&["render", "--net", "g.json", "--format", "dot", "-o", "g.dot"]);
    let status = Command::new(bin).current_dir(d).args(["render", "--net", "g.json", "--highlight", "nope.json"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}
