//! Random and exhaustive generators of virtual strings and Gauss words.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gauss::GaussParagraph;
use crate::vstring::{EndKind, VirtualString};

/// Label of the `k`-th arrow: `a`..`z`, then `x26`, `x27`, ...
pub fn label(k: usize) -> String {
    if k < 26 {
        ((b'a' + k as u8) as char).to_string()
    } else {
        format!("x{k}")
    }
}

/// Circles of `(arrow, kind)` endpoints.
type Layout = Vec<Vec<(usize, EndKind)>>;

fn to_string(layout: &Layout) -> Option<VirtualString> {
    let labeled: Vec<Vec<(String, EndKind)>> = layout
        .iter()
        .map(|c| c.iter().map(|&(a, k)| (label(a), k)).collect())
        .collect();
    VirtualString::from_labeled(&labeled).ok()
}

/// A random connected string with at most `max_arrows` arrows on at most
/// `max_circles` circles, every circle carrying an even number of endpoints.
pub fn random_string<R: Rng + ?Sized>(
    rng: &mut R,
    max_arrows: usize,
    max_circles: usize,
) -> VirtualString {
    assert!(max_arrows >= 1 && max_circles >= 1);
    loop {
        let k = rng.random_range(1..=max_arrows);
        let c = rng.random_range(1..=max_circles.min(k));
        let mut sizes = vec![2; c];
        for _ in 0..k - c {
            sizes[rng.random_range(0..c)] += 2;
        }
        let mut ends: Vec<(usize, EndKind)> = (0..k)
            .flat_map(|a| [(a, EndKind::Tail), (a, EndKind::Head)])
            .collect();
        ends.shuffle(rng);
        let mut layout = Vec::with_capacity(c);
        let mut rest = &ends[..];
        for s in sizes {
            let (head, tail) = rest.split_at(s);
            layout.push(head.to_vec());
            rest = tail;
        }
        if let Some(s) = to_string(&layout) {
            return s;
        }
    }
}

/// Even compositions of `total` into `parts` positive parts.
fn even_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return if total >= 2 {
            vec![vec![total]]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    let mut first = 2;
    while first + 2 * (parts - 1) <= total {
        for mut rest in even_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
        first += 2;
    }
    out
}

/// Every endpoint sequence of length `2k` with arrows numbered by first
/// appearance.
fn endpoint_sequences(k: usize) -> Vec<Vec<(usize, EndKind)>> {
    fn go(
        k: usize,
        seq: &mut Vec<(usize, EndKind)>,
        used: &mut Vec<[bool; 2]>,
        out: &mut Vec<Vec<(usize, EndKind)>>,
    ) {
        if seq.len() == 2 * k {
            out.push(seq.clone());
            return;
        }
        let opened = used.len();
        for a in 0..(opened + 1).min(k) {
            for (slot, kind) in [(0, EndKind::Tail), (1, EndKind::Head)] {
                if a < opened && used[a][slot] {
                    continue;
                }
                if a == opened {
                    used.push([false; 2]);
                }
                used[a][slot] = true;
                seq.push((a, kind));
                go(k, seq, used, out);
                seq.pop();
                used[a][slot] = false;
                if a == opened {
                    used.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Relabels arrows by first appearance, reading circles in order.
fn relabel(layout: &Layout) -> Layout {
    let mut map: Vec<Option<usize>> = vec![None; layout.iter().map(Vec::len).sum::<usize>()];
    let mut next = 0;
    layout
        .iter()
        .map(|c| {
            c.iter()
                .map(|&(a, k)| {
                    let id = *map[a].get_or_insert_with(|| {
                        next += 1;
                        next - 1
                    });
                    (id, k)
                })
                .collect()
        })
        .collect()
}

/// Least relabelled form over all per-circle rotations.
fn canonical(layout: &Layout) -> Layout {
    let mut best: Option<Layout> = None;
    let mut shifts = vec![0; layout.len()];
    loop {
        let rotated: Layout = layout
            .iter()
            .zip(&shifts)
            .map(|(c, &s)| c[s..].iter().chain(&c[..s]).copied().collect())
            .collect();
        let form = relabel(&rotated);
        if best.as_ref().is_none_or(|b| form < *b) {
            best = Some(form);
        }
        let mut i = 0;
        loop {
            if i == layout.len() {
                return best.expect("at least one rotation");
            }
            shifts[i] += 1;
            if shifts[i] < layout[i].len() {
                break;
            }
            shifts[i] = 0;
            i += 1;
        }
    }
}

/// All connected strings with at most `max_arrows` arrows on at most
/// `max_circles` circles with even endpoint counts, one per class under
/// circle rotations and relabelling.
pub fn exhaustive_strings(max_arrows: usize, max_circles: usize) -> Vec<VirtualString> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 1..=max_arrows {
        let seqs = endpoint_sequences(k);
        for c in 1..=max_circles.min(k) {
            for sizes in even_compositions(2 * k, c) {
                for seq in &seqs {
                    let mut layout = Vec::with_capacity(c);
                    let mut at = 0;
                    for &s in &sizes {
                        layout.push(seq[at..at + s].to_vec());
                        at += s;
                    }
                    let form = canonical(&layout);
                    if seen.insert(form.clone()) {
                        if let Some(s) = to_string(&form) {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    out
}

/// All one-word Gauss words with between 1 and `max_letters` letters, up to
/// rotation and relabelling.
pub fn gauss_words(max_letters: usize) -> Vec<GaussParagraph> {
    fn go(k: usize, seq: &mut Vec<usize>, count: &mut Vec<u8>, out: &mut Vec<Vec<usize>>) {
        if seq.len() == 2 * k {
            out.push(seq.clone());
            return;
        }
        let opened = count.len();
        for a in 0..(opened + 1).min(k) {
            if a < opened && count[a] == 2 {
                continue;
            }
            if a == opened {
                count.push(0);
            }
            count[a] += 1;
            seq.push(a);
            go(k, seq, count, out);
            seq.pop();
            count[a] -= 1;
            if a == opened {
                count.pop();
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 1..=max_letters {
        let mut words = Vec::new();
        go(k, &mut Vec::new(), &mut Vec::new(), &mut words);
        for w in words {
            let len = w.len();
            let form = (0..len)
                .map(|s| {
                    let rotated: Vec<usize> = w[s..].iter().chain(&w[..s]).copied().collect();
                    let mut map = vec![usize::MAX; k];
                    let mut next = 0;
                    rotated
                        .iter()
                        .map(|&a| {
                            if map[a] == usize::MAX {
                                map[a] = next;
                                next += 1;
                            }
                            map[a]
                        })
                        .collect::<Vec<_>>()
                })
                .min()
                .expect("nonempty word");
            if seen.insert(form.clone()) {
                let tokens: Vec<String> = form.iter().map(|&a| label(a)).collect();
                out.push(GaussParagraph::from_words([tokens]).expect("valid word"));
            }
        }
    }
    out
}
