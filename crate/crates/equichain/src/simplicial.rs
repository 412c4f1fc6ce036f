//! Simplicial front-end: finite simplicial complexes with a group acting by
//! vertex permutations, compiled down to signed equivariant chain complexes.
//! Simplices are stored with ascending vertex indices; the sign of a group
//! element on a simplex is the parity of the induced vertex permutation —
//! the unique convention making the compiled boundary equivariant.
//!
//! An action may fix a simplex setwise without fixing it vertexwise; such
//! complexes refuse to compile, and one barycentric subdivision (vertices =
//! simplices, simplices = inclusion chains) repairs them.

use std::collections::BTreeSet;

use crate::abelian::IntMatrix;
use crate::complexes::{ChainComplex, EquivariantChainComplex, FiniteGroup, SignedAction};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SimplicialGComplex {
    vertices: usize,
    /// simplices[k] = dimension-k simplices, each an ascending vertex list,
    /// the list itself in lexicographic order.
    simplices: Vec<Vec<Vec<usize>>>,
    group: FiniteGroup,
    /// vertex_action[g][v] = image vertex
    vertex_action: Vec<Vec<usize>>,
}

fn permutation_parity_sign(word: &[usize]) -> i64 {
    let mut inversions = 0;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl SimplicialGComplex {
    /// Build from any generating list of simplices; the set is closed under
    /// nonempty faces, deduplicated and sorted. The vertex action must be a
    /// permutation assignment satisfying the group law and carrying
    /// simplices to simplices.
    pub fn new(
        vertices: usize,
        simplices: Vec<Vec<usize>>,
        group: FiniteGroup,
        vertex_action: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut closed: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in &simplices {
            let mut v = s.clone();
            v.sort_unstable();
            v.dedup();
            if v.len() != s.len() {
                return Err(Error::InvalidComplex(format!(
                    "simplex {s:?} repeats a vertex"
                )));
            }
            if v.iter().any(|&x| x >= vertices) {
                return Err(Error::InvalidComplex(format!(
                    "simplex {s:?} uses a vertex index >= {vertices}"
                )));
            }
            if v.is_empty() {
                return Err(Error::InvalidComplex("empty simplex listed".into()));
            }
            // close under nonempty subsets
            let n = v.len();
            for mask in 1u32..(1 << n) {
                let face: Vec<usize> =
                    (0..n).filter(|i| mask & (1 << i) != 0).map(|i| v[i]).collect();
                closed.insert(face);
            }
        }

        if vertex_action.len() != group.order() {
            return Err(Error::InvalidComplex(format!(
                "vertex action lists {} elements, group has order {}",
                vertex_action.len(),
                group.order()
            )));
        }
        for (g, perm) in vertex_action.iter().enumerate() {
            if perm.len() != vertices {
                return Err(Error::InvalidComplex(format!(
                    "vertex action of element {g} covers {} vertices, expected {vertices}",
                    perm.len()
                )));
            }
            let mut seen = vec![false; vertices];
            for &w in perm {
                if w >= vertices || seen[w] {
                    return Err(Error::InvalidComplex(format!(
                        "vertex action of element {g} is not a permutation"
                    )));
                }
                seen[w] = true;
            }
        }
        for v in 0..vertices {
            if vertex_action[0][v] != v {
                return Err(Error::InvalidComplex(
                    "identity element must act trivially on vertices".into(),
                ));
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                for v in 0..vertices {
                    if vertex_action[g][vertex_action[h][v]] != vertex_action[gh][v] {
                        return Err(Error::InvalidComplex(format!(
                            "vertex action violates the group law at elements ({g},{h}), vertex {v}"
                        )));
                    }
                }
            }
        }
        for s in &closed {
            for g in 0..group.order() {
                let mut image: Vec<usize> = s.iter().map(|&v| vertex_action[g][v]).collect();
                image.sort_unstable();
                if !closed.contains(&image) {
                    return Err(Error::InvalidComplex(format!(
                        "element {g} carries simplex {s:?} outside the complex"
                    )));
                }
            }
        }

        let top = closed.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut per_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top];
        for s in closed {
            let k = s.len() - 1;
            per_dim[k].push(s);
        }
        // BTreeSet iteration is lexicographic; within a dimension that is
        // already the order we want.
        Ok(SimplicialGComplex { vertices, simplices: per_dim, group, vertex_action })
    }

    pub fn empty(group: FiniteGroup) -> Self {
        let order = group.order();
        SimplicialGComplex {
            vertices: 0,
            simplices: vec![],
            group,
            vertex_action: vec![vec![]; order],
        }
    }

    /// A single G-fixed point.
    pub fn point(group: FiniteGroup) -> Self {
        let order = group.order();
        SimplicialGComplex {
            vertices: 1,
            simplices: vec![vec![vec![0]]],
            group,
            vertex_action: vec![vec![0]; order],
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn vertex_action(&self) -> &[Vec<usize>] {
        &self.vertex_action
    }

    pub fn top_dim(&self) -> i64 {
        self.simplices.len() as i64 - 1
    }

    pub fn simplices(&self, k: i64) -> &[Vec<usize>] {
        if k < 0 || k >= self.simplices.len() as i64 {
            &[]
        } else {
            &self.simplices[k as usize]
        }
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(|v| v.len()).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.simplices.iter().map(|v| v.len()).sum()
    }

    fn index_of(&self, verts: &[usize]) -> Option<usize> {
        let k = verts.len().checked_sub(1)?;
        if k >= self.simplices.len() {
            return None;
        }
        self.simplices[k].binary_search_by(|s| s.as_slice().cmp(verts)).ok()
    }

    fn image_simplex(&self, g: usize, s: &[usize]) -> Vec<usize> {
        let mut image: Vec<usize> = s.iter().map(|&v| self.vertex_action[g][v]).collect();
        image.sort_unstable();
        image
    }

    /// First (element, simplex) fixed setwise but not vertexwise, if any.
    pub fn admissibility_violation(&self) -> Option<(usize, Vec<usize>)> {
        for g in 1..self.group.order() {
            for dim in &self.simplices {
                for s in dim {
                    if self.image_simplex(g, s) == *s && s.iter().any(|&v| self.vertex_action[g][v] != v)
                    {
                        return Some((g, s.clone()));
                    }
                }
            }
        }
        None
    }

    /// Compile to a signed equivariant chain complex: alternating-sum
    /// boundaries, permutation-parity signs.
    pub fn to_chain_complex(&self) -> Result<EquivariantChainComplex> {
        if let Some((g, s)) = self.admissibility_violation() {
            return Err(Error::NotAdmissible(format!(
                "element {g} fixes simplex {s:?} setwise but not vertexwise; barycentric subdivision makes the action admissible"
            )));
        }
        let counts = self.counts();
        let d = self.simplices.len();
        if d == 0 {
            return EquivariantChainComplex::new(
                self.group.clone(),
                ChainComplex::empty(),
                SignedAction::new(vec![vec![]; self.group.order()]),
                None,
            );
        }

        let mut boundaries = Vec::with_capacity(d - 1);
        for k in 1..d {
            let mut b = IntMatrix::zeros(counts[k - 1], counts[k]);
            for (j, s) in self.simplices[k].iter().enumerate() {
                for omit in 0..s.len() {
                    let face: Vec<usize> = s
                        .iter()
                        .enumerate()
                        .filter(|&(pos, _)| pos != omit)
                        .map(|(_, &v)| v)
                        .collect();
                    let r = self.index_of(&face).expect("faces are present by closure");
                    let sign = if omit % 2 == 0 { 1 } else { -1 };
                    b.set(r, j, num_bigint::BigInt::from(sign));
                }
            }
            boundaries.push(b);
        }

        let mut maps = Vec::with_capacity(self.group.order());
        for g in 0..self.group.order() {
            let mut per_elt = Vec::with_capacity(d);
            for k in 0..d {
                let mut per_dim = Vec::with_capacity(counts[k]);
                for s in &self.simplices[k] {
                    let word: Vec<usize> = s.iter().map(|&v| self.vertex_action[g][v]).collect();
                    let sign = permutation_parity_sign(&word);
                    let mut sorted = word;
                    sorted.sort_unstable();
                    let image = self.index_of(&sorted).expect("action closed");
                    per_dim.push((image, sign));
                }
                per_elt.push(per_dim);
            }
            maps.push(per_elt);
        }

        let labels: Vec<Vec<String>> = self
            .simplices
            .iter()
            .map(|dim| {
                dim.iter()
                    .map(|s| {
                        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(".")
                    })
                    .collect()
            })
            .collect();

        EquivariantChainComplex::new(
            self.group.clone(),
            ChainComplex::new(counts, boundaries)?,
            SignedAction::new(maps),
            Some(labels),
        )
    }

    /// Barycentric subdivision: one new vertex per simplex, one simplex per
    /// chain of proper inclusions. The induced action permutes chains, and
    /// any setwise-fixed chain is forced vertexwise-fixed after enough
    /// subdivisions.
    pub fn barycentric_subdivision(&self) -> SimplicialGComplex {
        let counts = self.counts();
        let mut offset = vec![0usize; counts.len() + 1];
        for k in 0..counts.len() {
            offset[k + 1] = offset[k] + counts[k];
        }
        let new_vertices = self.total_simplices();
        let vid = |k: usize, i: usize| offset[k] + i;

        // enumerate every chain of proper inclusions, top-down then reversed
        let mut chains: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (chain vids top-down, bottom simplex)
        for k in 0..counts.len() {
            for i in 0..counts[k] {
                stack.push((vec![vid(k, i)], self.simplices[k][i].clone()));
            }
        }
        while let Some((chain, bottom)) = stack.pop() {
            let mut as_simplex = chain.clone();
            as_simplex.reverse();
            chains.push(as_simplex);
            let n = bottom.len();
            if n > 1 {
                for mask in 1u32..(1 << n) - 1 {
                    let face: Vec<usize> =
                        (0..n).filter(|i| mask & (1 << i) != 0).map(|i| bottom[i]).collect();
                    let fk = face.len() - 1;
                    let fi = self.index_of(&face).expect("closure");
                    let mut next = chain.clone();
                    next.push(vid(fk, fi));
                    stack.push((next, face));
                }
            }
        }

        let mut new_action = Vec::with_capacity(self.group.order());
        for g in 0..self.group.order() {
            let mut perm = vec![0usize; new_vertices];
            for k in 0..counts.len() {
                for i in 0..counts[k] {
                    let image = self.image_simplex(g, &self.simplices[k][i]);
                    let j = self.index_of(&image).expect("action closed");
                    perm[vid(k, i)] = vid(k, j);
                }
            }
            new_action.push(perm);
        }

        SimplicialGComplex::new(new_vertices, chains, self.group.clone(), new_action)
            .expect("subdivision of a valid complex is valid")
    }

    /// Join over the same group: simplices σ ⊔ τ with τ's vertices shifted
    /// past ours, plus both originals; diagonal action.
    pub fn join(&self, other: &SimplicialGComplex) -> Result<SimplicialGComplex> {
        if self.group != *other.group() {
            return Err(Error::InvalidComplex("join factors must carry the same group".into()));
        }
        let shift = self.vertices;
        let mut simplices: Vec<Vec<usize>> = Vec::new();
        let ours: Vec<Vec<usize>> = self.simplices.iter().flatten().cloned().collect();
        let theirs: Vec<Vec<usize>> =
            other.simplices.iter().flatten().map(|s| s.iter().map(|&v| v + shift).collect()).collect();
        simplices.extend(ours.iter().cloned());
        simplices.extend(theirs.iter().cloned());
        for a in &ours {
            for b in &theirs {
                let mut j = a.clone();
                j.extend_from_slice(b);
                simplices.push(j);
            }
        }
        let mut action = Vec::with_capacity(self.group.order());
        for g in 0..self.group.order() {
            let mut perm = Vec::with_capacity(self.vertices + other.vertices);
            perm.extend(self.vertex_action[g].iter().copied());
            perm.extend(other.vertex_action[g].iter().map(|&v| v + shift));
            action.push(perm);
        }
        SimplicialGComplex::new(self.vertices + other.vertices, simplices, self.group.clone(), action)
    }

    /// Join with one G-fixed apex (the last vertex); always acyclic.
    pub fn cone(&self) -> SimplicialGComplex {
        self.join(&SimplicialGComplex::point(self.group.clone()))
            .expect("point carries the same group")
    }

    /// Euler characteristic Σ (-1)^k (number of k-simplices).
    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }
}
