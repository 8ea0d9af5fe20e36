//! Graph embeddings in surfaces, encoded as rotation systems with edge
//! signatures.
//!
//! A scheme lists, for each vertex, the cyclic order of its darts, plus a
//! signature of `+1` or `-1` per edge. Faces are traced by the usual
//! next-dart rule: the local orientation flips every time the walk crosses an
//! edge with signature `-1`.

mod oracle;
mod search;

pub use oracle::{brute_force_embed_oracle, brute_force_embed_oracle_with};
pub use search::{embed_decide, embed_decide_where, EmbedLimits, EmbedOutcome, Interleave};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Upper bound on the Euler genus of the target surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SurfaceBudget {
    pub max_euler_genus: u32,
}

impl SurfaceBudget {
    pub const SPHERE: SurfaceBudget = SurfaceBudget { max_euler_genus: 0 };
    pub const PROJECTIVE_PLANE: SurfaceBudget = SurfaceBudget { max_euler_genus: 1 };

    pub fn new(max_euler_genus: i64) -> Result<Self> {
        if max_euler_genus < 0 {
            return invalid(format!("surface budget must be >= 0, got {max_euler_genus}"));
        }
        Ok(SurfaceBudget {
            max_euler_genus: max_euler_genus as u32,
        })
    }

    pub fn name(self) -> &'static str {
        match self.max_euler_genus {
            0 => "sphere",
            1 => "projective",
            _ => "euler-genus-bound",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingScheme {
    /// Cyclic dart order around each vertex.
    pub rotations: Vec<Vec<usize>>,
    /// `+1` or `-1` per edge.
    pub signatures: Vec<i8>,
}

impl EmbeddingScheme {
    /// Checks that every dart sits exactly once in the rotation of its own
    /// vertex and that every edge carries a signature of `+1` or `-1`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.rotations.len() != g.vertex_count() {
            return invalid(format!(
                "scheme has {} rotations for {} vertices",
                self.rotations.len(),
                g.vertex_count()
            ));
        }
        if self.signatures.len() != g.edge_count() {
            return invalid(format!(
                "scheme has {} signatures for {} edges",
                self.signatures.len(),
                g.edge_count()
            ));
        }
        if let Some(e) = self.signatures.iter().position(|&s| s != 1 && s != -1) {
            return invalid(format!("signature of edge {e} is not +1 or -1"));
        }
        let mut seen = vec![false; 2 * g.edge_count()];
        for (v, rot) in self.rotations.iter().enumerate() {
            if rot.len() != g.degree(v) {
                return invalid(format!("rotation at vertex {v} has wrong length"));
            }
            for &d in rot {
                if d >= seen.len() || g.dart_vertex(d) != v {
                    return invalid(format!("dart {d} does not belong to vertex {v}"));
                }
                if std::mem::replace(&mut seen[d], true) {
                    return invalid(format!("dart {d} repeated"));
                }
            }
        }
        Ok(())
    }

    /// Successor and predecessor arrays indexed by dart.
    pub(crate) fn successor_arrays(&self, darts: usize) -> (Vec<usize>, Vec<usize>) {
        let mut succ = vec![0; darts];
        let mut pred = vec![0; darts];
        for rot in &self.rotations {
            for (i, &d) in rot.iter().enumerate() {
                let next = rot[(i + 1) % rot.len()];
                succ[d] = next;
                pred[next] = d;
            }
        }
        (succ, pred)
    }

    /// Reverses the rotation at `v` and toggles the signatures of its edges.
    /// The face structure is unchanged.
    pub fn flip_vertex(&mut self, g: &Graph, v: usize) {
        self.rotations[v].reverse();
        for &(_, e) in g.incident(v) {
            self.signatures[e] = -self.signatures[e];
        }
    }
}

/// Faces as closed walks; each entry lists the darts along which the walk
/// leaves successive vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCollection {
    pub faces: Vec<Vec<usize>>,
}

impl FaceCollection {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn total_length(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }
}

/// Traces the faces of a signed rotation system. An edgeless graph has a
/// single empty face.
pub fn trace_faces(g: &Graph, s: &EmbeddingScheme) -> Result<FaceCollection> {
    s.validate(g)?;
    let darts = 2 * g.edge_count();
    if darts == 0 {
        return Ok(FaceCollection {
            faces: vec![Vec::new()],
        });
    }
    let (succ, pred) = s.successor_arrays(darts);
    // A corner is named by its first dart `d` and spans `d -> succ[d]`.
    let mut used = vec![false; darts];
    let mut faces = Vec::new();
    for start in 0..darts {
        if used[start] {
            continue;
        }
        let mut walk = Vec::new();
        let (mut corner, mut orient) = (start, 1i8);
        loop {
            used[corner] = true;
            let leave = if orient > 0 { succ[corner] } else { corner };
            walk.push(leave);
            let twin = leave ^ 1;
            orient *= s.signatures[leave / 2];
            let (next, next_orient) = if orient > 0 { (twin, 1) } else { (pred[twin], -1) };
            if next == start {
                debug_assert_eq!(next_orient, 1);
                break;
            }
            corner = next;
            orient = next_orient;
        }
        faces.push(walk);
    }
    Ok(FaceCollection { faces })
}

/// `2 - n + m - f` for a connected graph.
pub fn euler_genus(g: &Graph, s: &EmbeddingScheme) -> Result<i64> {
    if !g.is_connected() {
        return invalid("euler genus requires a connected graph");
    }
    let f = trace_faces(g, s)?.face_count() as i64;
    Ok(2 - g.vertex_count() as i64 + g.edge_count() as i64 - f)
}

/// True iff the signature product along the cycle is `-1`. In a scheme of
/// Euler genus at most one this is exactly non-contractibility.
///
/// The cycle is given as a vertex sequence, with or without the closing
/// repetition of its first vertex.
pub fn cycle_one_sided(g: &Graph, s: &EmbeddingScheme, cycle: &[usize]) -> Result<bool> {
    let verts = match cycle {
        [first, .., last] if first == last && cycle.len() > 1 => &cycle[..cycle.len() - 1],
        _ => cycle,
    };
    if verts.len() < 3 {
        return invalid("a cycle needs at least three vertices");
    }
    let mut distinct = verts.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != verts.len() {
        return invalid("cycle repeats a vertex");
    }
    if s.signatures.len() != g.edge_count() {
        return Err(Error::InvalidInput("scheme does not match graph".into()));
    }
    let mut product = 1i8;
    for i in 0..verts.len() {
        let (a, b) = (verts[i], verts[(i + 1) % verts.len()]);
        let e = g
            .edge_index(a, b)
            .ok_or_else(|| Error::InvalidInput(format!("{a} and {b} are not adjacent")))?;
        product *= s.signatures[e];
    }
    Ok(product < 0)
}

/// The scheme in which every vertex uses its incidence order and every
/// signature is `+1`.
pub fn default_scheme(g: &Graph) -> EmbeddingScheme {
    let rotations = (0..g.vertex_count())
        .map(|v| g.incident(v).iter().map(|&(_, e)| g.dart_at(e, v)).collect())
        .collect();
    EmbeddingScheme {
        rotations,
        signatures: vec![1; g.edge_count()],
    }
}
