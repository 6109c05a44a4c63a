//! Random well-typed programs for the expression language.

use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sort {
    Seq,
    Enum,
}

fn bits<R: Rng>(rng: &mut R) -> String {
    let len = rng.gen_range(1..=6);
    (0..len).map(|_| if rng.gen_bool(0.5) { '1' } else { '0' }).collect()
}

/// A canonical program text of the given sort, nested at most `depth` deep.
pub fn program<R: Rng>(rng: &mut R, sort: Sort, depth: u32) -> String {
    let leaf = depth == 0 || rng.gen_bool(0.3);
    match sort {
        Sort::Seq if leaf => match rng.gen_range(0..4) {
            0 => "zeros".into(),
            1 => "ones".into(),
            2 => format!("periodic({})", bits(rng)),
            _ => format!("natrow({})", rng.gen_range(0..5000u32)),
        },
        Sort::Seq => match rng.gen_range(0..3) {
            0 => format!("prepend({}, {})", bits(rng), program(rng, Sort::Seq, depth - 1)),
            1 => format!("compl({})", program(rng, Sort::Seq, depth - 1)),
            _ => format!("diagc({})", program(rng, Sort::Enum, depth - 1)),
        },
        Sort::Enum if leaf => {
            if rng.gen_bool(0.5) {
                "figure5".into()
            } else {
                format!("const({})", program(rng, Sort::Seq, depth.saturating_sub(1)))
            }
        }
        Sort::Enum => match rng.gen_range(0..5) {
            0 => format!("const({})", program(rng, Sort::Seq, depth - 1)),
            1 => format!(
                "interleave({}, {})",
                program(rng, Sort::Enum, depth - 1),
                program(rng, Sort::Enum, depth - 1)
            ),
            2 => format!("spliteven({})", program(rng, Sort::Enum, depth - 1)),
            3 => format!("splitodd({})", program(rng, Sort::Enum, depth - 1)),
            _ => format!(
                "insert({}, {}, {})",
                program(rng, Sort::Enum, depth - 1),
                rng.gen_range(0..64u32),
                program(rng, Sort::Seq, depth - 1)
            ),
        },
    }
}
