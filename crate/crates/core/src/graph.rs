//! The multi-hubbed wheel `W_d(s)`: `s` pairwise non-adjacent hubs, each joined
//! to every vertex of a boundary cycle of length `d`.
//!
//! Vertices and edges are identified by index. Hubs are `u_1..u_s`, boundary
//! vertices `v_1..v_d`; all boundary indices are read modulo `d` with
//! representatives in `1..=d`.
//!
//! Edges carry a linear id in `1..=(s+1)d`: spoke `u_a v_i` maps to
//! `(a-1)d + i` and rim edge `v_i v_{i+1}` maps to `sd + i`. The same numbering
//! is used for colors in the spoke part of the rim-grouped construction, and
//! every edge set in the crate is a sorted list of these ids.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of `W_d(s)`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Vertex {
    Hub(usize),
    Boundary(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Hub(a) => write!(f, "u{a}"),
            Vertex::Boundary(i) => write!(f, "v{i}"),
        }
    }
}

/// An edge of `W_d(s)`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeId {
    /// `v_i v_{i+1}` (indices modulo `d`).
    Rim(usize),
    /// `u_hub v_pos`.
    Spoke { hub: usize, pos: usize },
}

impl EdgeId {
    pub fn is_spoke(self) -> bool {
        matches!(self, EdgeId::Spoke { .. })
    }

    /// Boundary position of the edge: `pos` for a spoke, `i` for rim `v_i v_{i+1}`.
    pub fn position(self) -> usize {
        match self {
            EdgeId::Rim(i) => i,
            EdgeId::Spoke { pos, .. } => pos,
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EdgeId::Rim(i) => write!(f, "rim({i})"),
            EdgeId::Spoke { hub, pos } => write!(f, "spoke({hub},{pos})"),
        }
    }
}

/// The host graph `W_d(s)`. Immutable once built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WheelGraph {
    d: usize,
    s: usize,
}

impl WheelGraph {
    /// Builds `W_d(s)`; requires `d >= 3` and `s >= 1`.
    pub fn new(d: usize, s: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::Domain(format!("boundary cycle length d = {d} must be at least 3")));
        }
        if s < 1 {
            return Err(Error::Domain(format!("hub count s = {s} must be at least 1")));
        }
        Ok(WheelGraph { d, s })
    }

    /// The ordinary wheel `W_d`.
    pub fn wheel(d: usize) -> Result<Self> {
        Self::new(d, 1)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn vertex_count(&self) -> usize {
        self.s + self.d
    }

    pub fn edge_count(&self) -> usize {
        (self.s + 1) * self.d
    }

    /// Boundary vertex for any integer index, reduced modulo `d` into `1..=d`.
    pub fn boundary(&self, i: i64) -> Vertex {
        Vertex::Boundary(self.wrap(i))
    }

    /// Reduces an integer boundary index into `1..=d`.
    pub fn wrap(&self, i: i64) -> usize {
        let d = self.d as i64;
        ((i - 1).rem_euclid(d) + 1) as usize
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        match v {
            Vertex::Hub(a) => (1..=self.s).contains(&a),
            Vertex::Boundary(i) => (1..=self.d).contains(&i),
        }
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        match e {
            EdgeId::Rim(i) => (1..=self.d).contains(&i),
            EdgeId::Spoke { hub, pos } => (1..=self.s).contains(&hub) && (1..=self.d).contains(&pos),
        }
    }

    /// Hubs first, then the boundary cycle in order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.s).map(Vertex::Hub).chain((1..=self.d).map(Vertex::Boundary))
    }

    /// Dense 0-based vertex index: hubs `0..s`, boundary `s..s+d`.
    pub fn vertex_index(&self, v: Vertex) -> usize {
        match v {
            Vertex::Hub(a) => a - 1,
            Vertex::Boundary(i) => self.s + i - 1,
        }
    }

    pub fn vertex_at(&self, index: usize) -> Vertex {
        if index < self.s {
            Vertex::Hub(index + 1)
        } else {
            Vertex::Boundary(index - self.s + 1)
        }
    }

    /// All edges in linear-id order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (1..=self.edge_count()).map(move |id| self.edge_from_id(id))
    }

    /// Linear id in `1..=(s+1)d`.
    pub fn linearize(&self, e: EdgeId) -> usize {
        match e {
            EdgeId::Spoke { hub, pos } => (hub - 1) * self.d + pos,
            EdgeId::Rim(i) => self.s * self.d + i,
        }
    }

    /// Inverse of [`WheelGraph::linearize`].
    pub fn unlinearize(&self, id: usize) -> Result<EdgeId> {
        if id == 0 || id > self.edge_count() {
            return Err(Error::Lookup(format!(
                "edge id {id} outside 1..={} of W_{}({})",
                self.edge_count(),
                self.d,
                self.s
            )));
        }
        Ok(self.edge_from_id(id))
    }

    fn edge_from_id(&self, id: usize) -> EdgeId {
        let spokes = self.s * self.d;
        if id <= spokes {
            EdgeId::Spoke { hub: (id - 1) / self.d + 1, pos: (id - 1) % self.d + 1 }
        } else {
            EdgeId::Rim(id - spokes)
        }
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        match e {
            EdgeId::Rim(i) => (Vertex::Boundary(i), self.boundary(i as i64 + 1)),
            EdgeId::Spoke { hub, pos } => (Vertex::Hub(hub), Vertex::Boundary(pos)),
        }
    }

    /// The edge joining `a` and `b`, if they are adjacent.
    pub fn edge_between(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        match (a, b) {
            (Vertex::Hub(_), Vertex::Hub(_)) => None,
            (Vertex::Hub(hub), Vertex::Boundary(pos)) | (Vertex::Boundary(pos), Vertex::Hub(hub)) => {
                Some(EdgeId::Spoke { hub, pos })
            }
            (Vertex::Boundary(i), Vertex::Boundary(j)) => {
                if self.wrap(i as i64 + 1) == j {
                    Some(EdgeId::Rim(i))
                } else if self.wrap(j as i64 + 1) == i {
                    Some(EdgeId::Rim(j))
                } else {
                    None
                }
            }
        }
    }

    pub fn neighbors(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        Ok(match v {
            Vertex::Hub(_) => (1..=self.d).map(Vertex::Boundary).collect(),
            Vertex::Boundary(i) => {
                let mut out = vec![self.boundary(i as i64 - 1), self.boundary(i as i64 + 1)];
                out.extend((1..=self.s).map(Vertex::Hub));
                out
            }
        })
    }

    /// Edges incident to `v`: for a boundary vertex the two rim edges come first.
    pub fn incident_edges(&self, v: Vertex) -> Result<Vec<EdgeId>> {
        self.check_vertex(v)?;
        Ok(match v {
            Vertex::Hub(hub) => (1..=self.d).map(|pos| EdgeId::Spoke { hub, pos }).collect(),
            Vertex::Boundary(i) => {
                let mut out = vec![EdgeId::Rim(self.wrap(i as i64 - 1)), EdgeId::Rim(i)];
                out.extend((1..=self.s).map(|hub| EdgeId::Spoke { hub, pos: i }));
                out
            }
        })
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(match v {
            Vertex::Hub(_) => self.d,
            Vertex::Boundary(_) => self.s + 2,
        })
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::Lookup(format!("{v} is not a vertex of W_{}({})", self.d, self.s)))
        }
    }

    /// Applies the automorphism that rotates the boundary by `shift`, optionally
    /// reflects it (`v_i -> v_{2-i}`), and relabels hubs by `hub_perm`
    /// (`hub_perm[a-1]` is the image of hub `a`).
    pub fn map_edge(&self, e: EdgeId, shift: usize, reflect: bool, hub_perm: &[usize]) -> EdgeId {
        let image = |i: usize| -> usize {
            let base = if reflect { 2 - i as i64 } else { i as i64 };
            self.wrap(base + shift as i64)
        };
        match e {
            EdgeId::Spoke { hub, pos } => EdgeId::Spoke { hub: hub_perm[hub - 1], pos: image(pos) },
            EdgeId::Rim(i) => {
                if reflect {
                    // v_i v_{i+1} -> v_{2-i} v_{1-i}, i.e. the rim edge starting at 1-i.
                    EdgeId::Rim(self.wrap(1 - i as i64 + shift as i64))
                } else {
                    EdgeId::Rim(image(i))
                }
            }
        }
    }
}

impl fmt::Display for WheelGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 1 {
            write!(f, "W_{}", self.d)
        } else {
            write!(f, "W_{}({})", self.d, self.s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w8_3_sizes() {
        let g = WheelGraph::new(8, 3).unwrap();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 32);
        assert_eq!(g.edges().filter(|e| e.is_spoke()).count(), 24);
    }

    #[test]
    fn w3_is_k4() {
        let g = WheelGraph::new(3, 1).unwrap();
        let vs: Vec<_> = g.vertices().collect();
        for (k, &a) in vs.iter().enumerate() {
            for &b in &vs[k + 1..] {
                assert!(g.edge_between(a, b).is_some(), "{a} {b}");
            }
        }
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn rejects_degenerate() {
        assert!(matches!(WheelGraph::new(2, 1), Err(Error::Domain(_))));
        assert!(matches!(WheelGraph::new(5, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn incident_edges_examples() {
        let g = WheelGraph::new(8, 3).unwrap();
        let hub = g.incident_edges(Vertex::Hub(1)).unwrap();
        assert_eq!(hub, (1..=8).map(|pos| EdgeId::Spoke { hub: 1, pos }).collect::<Vec<_>>());

        let mut v1 = g.incident_edges(Vertex::Boundary(1)).unwrap();
        v1.sort();
        let mut expected = vec![
            EdgeId::Rim(8),
            EdgeId::Rim(1),
            EdgeId::Spoke { hub: 1, pos: 1 },
            EdgeId::Spoke { hub: 2, pos: 1 },
            EdgeId::Spoke { hub: 3, pos: 1 },
        ];
        expected.sort();
        assert_eq!(v1, expected);

        let w5 = WheelGraph::wheel(5).unwrap();
        assert_eq!(w5.incident_edges(Vertex::Boundary(3)).unwrap().len(), 3);
        assert!(matches!(w5.incident_edges(Vertex::Hub(2)), Err(Error::Lookup(_))));
        assert!(matches!(w5.incident_edges(Vertex::Boundary(6)), Err(Error::Lookup(_))));
    }

    #[test]
    fn linear_ids_cover_range() {
        let g = WheelGraph::new(5, 2).unwrap();
        assert_eq!(g.linearize(EdgeId::Spoke { hub: 2, pos: 3 }), 8);
        assert_eq!(g.linearize(EdgeId::Rim(1)), 11);
        assert!(g.unlinearize(0).is_err());
        assert!(g.unlinearize(16).is_err());
    }

    #[test]
    fn automorphisms_preserve_edges() {
        let g = WheelGraph::new(7, 3).unwrap();
        let perm = [3, 1, 2];
        for reflect in [false, true] {
            for shift in 0..7 {
                for e in g.edges() {
                    let (a, b) = g.endpoints(e);
                    let img = g.map_edge(e, shift, reflect, &perm);
                    let map_v = |v: Vertex| match v {
                        Vertex::Hub(h) => Vertex::Hub(perm[h - 1]),
                        Vertex::Boundary(i) => {
                            let base = if reflect { 2 - i as i64 } else { i as i64 };
                            g.boundary(base + shift as i64)
                        }
                    };
                    assert_eq!(g.edge_between(map_v(a), map_v(b)), Some(img));
                }
            }
        }
    }
}
