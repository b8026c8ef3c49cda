//! Ribbon graph of a virtual string and the genus of its closed surface.

use std::fmt;

use serde::Serialize;

use crate::vstring::{EndKind, VirtualString};

/// One of the four half-edge ends at an arrow's vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Port {
    /// Circle arc arriving at the tail.
    InTail,
    /// Circle arc leaving the tail.
    OutTail,
    /// Circle arc arriving at the head.
    InHead,
    /// Circle arc leaving the head.
    OutHead,
}

impl Port {
    const ALL: [Port; 4] = [Port::InTail, Port::OutTail, Port::InHead, Port::OutHead];

    fn index(self) -> usize {
        self as usize
    }

    /// Counterclockwise successor at the vertex.
    ///
    /// The tail strand runs along the vertical axis of the crossing disc
    /// (entering from below, leaving upward) and the head strand along the
    /// horizontal axis (entering from the left, leaving to the right). Going
    /// counterclockwise from the bottom: in-tail, out-head, out-tail, in-head.
    fn next_ccw(self) -> Port {
        match self {
            Port::InTail => Port::OutHead,
            Port::OutHead => Port::OutTail,
            Port::OutTail => Port::InHead,
            Port::InHead => Port::InTail,
        }
    }

    fn endpoint(self) -> (EndKind, bool) {
        match self {
            Port::InTail => (EndKind::Tail, true),
            Port::OutTail => (EndKind::Tail, false),
            Port::InHead => (EndKind::Head, true),
            Port::OutHead => (EndKind::Head, false),
        }
    }

    fn of(kind: EndKind, incoming: bool) -> Port {
        match (kind, incoming) {
            (EndKind::Tail, true) => Port::InTail,
            (EndKind::Tail, false) => Port::OutTail,
            (EndKind::Head, true) => Port::InHead,
            (EndKind::Head, false) => Port::OutHead,
        }
    }
}

/// A half-edge: arrow vertex plus port.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge {
    pub arrow: usize,
    pub port: Port,
}

impl HalfEdge {
    fn index(self) -> usize {
        4 * self.arrow + self.port.index()
    }

    fn from_index(k: usize) -> Self {
        HalfEdge {
            arrow: k / 4,
            port: Port::ALL[k % 4],
        }
    }
}

/// Four-valent ribbon graph: one vertex per arrow, one edge per circle arc
/// between consecutive endpoints.
#[derive(Debug, Clone)]
pub struct RibbonGraph {
    n_vertices: usize,
    /// Partner of each half-edge across its edge.
    opposite: Vec<usize>,
    labels: Vec<String>,
}

impl RibbonGraph {
    pub fn build(s: &VirtualString) -> Self {
        let n = s.n_arrows();
        let mut opposite = vec![usize::MAX; 4 * n];
        for circle in s.circles() {
            let m = circle.len();
            for k in 0..m {
                let from = circle[k];
                let to = circle[(k + 1) % m];
                let out = HalfEdge {
                    arrow: from.arrow,
                    port: Port::of(from.kind, false),
                }
                .index();
                let inc = HalfEdge {
                    arrow: to.arrow,
                    port: Port::of(to.kind, true),
                }
                .index();
                opposite[out] = inc;
                opposite[inc] = out;
            }
        }
        debug_assert!(opposite.iter().all(|&o| o != usize::MAX));
        RibbonGraph {
            n_vertices: n,
            opposite,
            labels: (0..n).map(|a| s.label(a).to_string()).collect(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.opposite.len() / 2
    }

    pub fn rotation(&self, h: HalfEdge) -> HalfEdge {
        HalfEdge {
            arrow: h.arrow,
            port: h.port.next_ccw(),
        }
    }

    pub fn opposite(&self, h: HalfEdge) -> HalfEdge {
        HalfEdge::from_index(self.opposite[h.index()])
    }

    /// Boundary cycles: cross the edge, then turn to the rotation successor.
    /// Each cycle is listed from its least half-edge.
    pub fn boundary_cycles(&self) -> Vec<Vec<HalfEdge>> {
        let total = self.opposite.len();
        let mut seen = vec![false; total];
        let mut cycles = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                let h = HalfEdge::from_index(k);
                cycle.push(h);
                k = self.rotation(self.opposite(h)).index();
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn boundary_components(&self) -> usize {
        self.boundary_cycles().len()
    }

    /// Renders a half-edge as `label:tail|head:in|out`.
    pub fn half_edge_name(&self, h: HalfEdge) -> String {
        let (kind, incoming) = h.port.endpoint();
        format!(
            "{}:{}:{}",
            self.labels[h.arrow],
            if kind == EndKind::Tail {
                "tail"
            } else {
                "head"
            },
            if incoming { "in" } else { "out" }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceSummary {
    pub boundary_components: usize,
    pub euler_characteristic: i64,
    pub genus: usize,
}

impl SurfaceSummary {
    pub fn is_planar(&self) -> bool {
        self.genus == 0
    }
}

impl fmt::Display for SurfaceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "b={} chi={} g={} planar={}",
            self.boundary_components,
            self.euler_characteristic,
            self.genus,
            if self.is_planar() { "yes" } else { "no" }
        )
    }
}

pub fn build_ribbon(s: &VirtualString) -> RibbonGraph {
    RibbonGraph::build(s)
}

pub fn summarize(rg: &RibbonGraph) -> SurfaceSummary {
    let chi = rg.n_vertices() as i64 - rg.n_edges() as i64;
    let b = rg.boundary_components() as i64;
    let twice = 2 - chi - b;
    debug_assert!(twice >= 0 && twice % 2 == 0);
    SurfaceSummary {
        boundary_components: b as usize,
        euler_characteristic: chi,
        genus: (twice / 2) as usize,
    }
}

/// Genus of the closed surface obtained by capping the ribbon surface.
pub fn genus(s: &VirtualString) -> SurfaceSummary {
    summarize(&RibbonGraph::build(s))
}

/// Boundary cycles rendered as lists of half-edge names.
pub fn certificate(s: &VirtualString) -> Vec<Vec<String>> {
    let rg = RibbonGraph::build(s);
    rg.boundary_cycles()
        .iter()
        .map(|c| c.iter().map(|&h| rg.half_edge_name(h)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::GaussParagraph;
    use crate::partition::WordWisePartition;

    fn vs(json: &str) -> VirtualString {
        VirtualString::from_json(json).unwrap()
    }

    #[test]
    fn counts() {
        let rg = build_ribbon(&vs(r#"{"circles":[["a+","a-"]]}"#));
        assert_eq!((rg.n_vertices(), rg.n_edges()), (1, 2));
        let rg = build_ribbon(&vs(r#"{"circles":[["a+","b+","a-","b-"]]}"#));
        assert_eq!((rg.n_vertices(), rg.n_edges()), (2, 4));
        let rg = build_ribbon(&vs(r#"{"circles":[["a+","b-"],["a-","b+"]]}"#));
        assert_eq!((rg.n_vertices(), rg.n_edges()), (2, 4));
    }

    #[test]
    fn figure_eight() {
        let g = genus(&vs(r#"{"circles":[["a+","a-"]]}"#));
        assert_eq!(g.boundary_components, 3);
        assert_eq!(g.euler_characteristic, -1);
        assert_eq!(g.genus, 0);
    }

    #[test]
    fn abab_every_orientation_is_toroidal() {
        for json in [
            r#"{"circles":[["a+","b+","a-","b-"]]}"#,
            r#"{"circles":[["a+","b-","a-","b+"]]}"#,
        ] {
            assert_eq!(genus(&vs(json)).genus, 1);
        }
    }

    #[test]
    fn hopf_shadow() {
        let p = GaussParagraph::parse("a b\na b\n").unwrap();
        let part = WordWisePartition::from_tokens(&p, &[(&["a"], &[]), (&["b"], &[])]).unwrap();
        let s = VirtualString::construct_from_pair(&p, &part).unwrap();
        assert_eq!(genus(&s).genus, 0);
        // Both arrows pointing the same way cannot come from a planar curve.
        let bad = vs(r#"{"circles":[["a+","b+"],["a-","b-"]]}"#);
        assert_eq!(genus(&bad).genus, 1);
    }

    #[test]
    fn every_half_edge_on_one_boundary() {
        let s = vs(r#"{"circles":[["a+","b-","c+","a-","b+","c-"]]}"#);
        let rg = build_ribbon(&s);
        let cycles = rg.boundary_cycles();
        let covered: usize = cycles.iter().map(Vec::len).sum();
        assert_eq!(covered, 2 * rg.n_edges());
        assert_eq!(certificate(&s).len(), cycles.len());
    }

    #[test]
    fn boundary_names() {
        let s = vs(r#"{"circles":[["a+","a-"]]}"#);
        let cert = certificate(&s);
        assert_eq!(cert[0], ["a:tail:in", "a:tail:out"]);
    }
}
