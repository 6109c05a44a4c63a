use enumerlab_cli::figures::{render_figure, FigParams};
use enumerlab_core::Budget;

/// Rows 0..=16 of the printed truth-table matrix, columns 0..=4.
const PRINTED: [&str; 17] = [
    "00000", "10000", "01000", "11000", "00100", "10100", "01100", "11100", "00010", "10010",
    "01010", "11010", "00110", "10110", "01110", "11110", "00001",
];

fn texts(svg: &str, class: &str) -> Vec<String> {
    let open = format!(r#"<text class="{class}""#);
    svg.lines()
        .filter(|l| l.trim_start().starts_with(&open))
        .map(|l| l[l.find('>').unwrap() + 1..l.rfind("</text>").unwrap()].to_string())
        .collect()
}

fn render(n: u8, p: FigParams) -> String {
    render_figure(n, &p, Budget::default()).unwrap()
}

#[test]
fn figure5_matches_printed_digits() {
    let svg = render(5, FigParams::default());
    let bits = texts(&svg, "bit");
    assert_eq!(bits.len(), 17 * 5);
    let rows: Vec<String> = bits.chunks(5).map(|c| c.concat()).collect();
    assert_eq!(rows, PRINTED);
    let labels: Vec<String> = (0..17).map(|r: u32| r.to_string()).collect();
    assert_eq!(texts(&svg, "row"), labels);
}

#[test]
fn figure6_default_labels() {
    let svg = render(6, FigParams::default());
    assert_eq!(texts(&svg, "label"), ["0", "2", "3", "9", "10", "20", "21"]);
}

#[test]
fn figure2_depth_one_has_two_labelled_edges() {
    let svg = render(
        2,
        FigParams {
            depth: Some(1),
            ..Default::default()
        },
    );
    assert_eq!(svg.matches(r#"<line class="edge""#).count(), 2);
    assert_eq!(texts(&svg, "branch"), ["0", "1"]);
}

#[test]
fn figure2_depth_four() {
    let svg = render(2, FigParams::default());
    assert_eq!(svg.matches(r#"<line class="edge""#).count(), 30);
    assert_eq!(svg.matches("<circle").count(), 31);
}

#[test]
fn figure4_without_diagonals() {
    let svg = render(
        4,
        FigParams {
            diagonals: Some(0),
            ..Default::default()
        },
    );
    assert!(!svg.contains("<polyline"));
}

#[test]
fn figure1_is_a_square_grid() {
    let svg = render(
        1,
        FigParams {
            grid: Some(5),
            ..Default::default()
        },
    );
    assert_eq!(svg.matches(r#"<line class="grid""#).count(), 10);
    assert_eq!(texts(&svg, "col"), ["0", "1", "2", "3", "4"]);
}

#[test]
fn every_figure_is_well_formed_and_stable() {
    for n in 1..=6 {
        let a = render(n, FigParams::default());
        let b = render(n, FigParams::default());
        assert_eq!(a, b);
        assert_eq!(a.matches("<svg ").count(), 1);
        assert!(a.ends_with("</svg>\n"));
        let opens = a.matches("<text").count();
        assert_eq!(opens, a.matches("</text>").count());
    }
}
