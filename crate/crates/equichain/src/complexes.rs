//! The central data model: finite groups acting by signed cell permutations
//! on finite chain complexes of free abelian groups.
//!
//! Admissibility — any element mapping a cell to plus-or-minus itself must
//! map it to plus itself — is the chain-level shadow of the requirement that
//! a cell fixed by a group element is fixed pointwise. Everything downstream
//! (orbit bases, norm maps, fixed complexes) depends on it.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abelian::IntMatrix;
use crate::abelian::is_prime;
use crate::error::{Error, Result};

/// A finite group presented by its full multiplication table, with element 0
/// as the identity. Cyclic groups remember a designated generator.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    generator: Option<usize>,
    label: Option<String>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validate a multiplication table as a group with identity 0.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty multiplication table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "multiplication table row {i} has length {} (expected {n})",
                    row.len()
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                if e >= n {
                    return Err(Error::InvalidGroup(format!(
                        "multiplication table entry out of range at ({i},{j})"
                    )));
                }
            }
        }
        for j in 0..n {
            if table[0][j] != j {
                return Err(Error::InvalidGroup(format!(
                    "element 0 is not a left identity at {j}"
                )));
            }
            if table[j][0] != j {
                return Err(Error::InvalidGroup(format!(
                    "element 0 is not a right identity at {j}"
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(Error::InvalidGroup(format!(
                            "multiplication table not associative at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            let mut found = None;
            for j in 0..n {
                if table[i][j] == 0 && table[j][i] == 0 {
                    found = Some(j);
                    break;
                }
            }
            inverse[i] =
                found.ok_or_else(|| Error::InvalidGroup(format!("element {i} has no inverse")))?;
        }
        let mut g = FiniteGroup { table, inverse, generator: None, label: None };
        g.generator = (0..n).find(|&e| g.element_order(e) == n);
        if g.generator.is_some() {
            g.label = Some(format!("cyclic:{n}"));
        }
        Ok(g)
    }

    /// The cyclic group of order n with generator 1 (0 for the trivial group).
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let inverse = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup {
            table,
            inverse,
            generator: Some(if n == 1 { 0 } else { 1 }),
            label: Some(format!("cyclic:{n}")),
        }
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// The designated generator when the group is cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        self.generator
    }

    /// `(p, g)` for a cyclic group of prime order p with generator g.
    pub fn prime_order_generator(&self) -> Result<(u64, usize)> {
        let n = self.order() as u64;
        if !is_prime(n) {
            return Err(Error::NotPrimeOrder);
        }
        Ok((n, self.generator.expect("groups of prime order are cyclic")))
    }

    /// A small deterministic generating set: scan elements in index order,
    /// keeping each one not already generated by those kept so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut closure = vec![false; n];
        closure[0] = true;
        let mut count = 1;
        for e in 1..n {
            if closure[e] {
                continue;
            }
            gens.push(e);
            // close under products with the new generator
            let mut frontier: Vec<usize> = (0..n).filter(|&x| closure[x]).collect();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    for y in [self.mul(x, g), self.mul(g, x)] {
                        if !closure[y] {
                            closure[y] = true;
                            count += 1;
                            frontier.push(y);
                        }
                    }
                }
            }
            if count == n {
                break;
            }
        }
        gens
    }

    /// Check that the given element indices form a subgroup.
    pub fn check_subgroup(&self, indices: &[usize]) -> Result<Vec<usize>> {
        let mut h: Vec<usize> = indices.to_vec();
        h.sort_unstable();
        h.dedup();
        if h.iter().any(|&e| e >= self.order()) {
            return Err(Error::NotASubgroup("element index out of range".into()));
        }
        if !h.contains(&0) {
            return Err(Error::NotASubgroup("subset does not contain the identity".into()));
        }
        let in_h = |e: usize| h.binary_search(&e).is_ok();
        for &a in &h {
            if !in_h(self.inv(a)) {
                return Err(Error::NotASubgroup(format!(
                    "subset not closed under inversion: inverse of {a} missing"
                )));
            }
            for &b in &h {
                let c = self.mul(a, b);
                if !in_h(c) {
                    return Err(Error::NotASubgroup(format!(
                        "subset not closed: {a}*{b} = {c} is outside"
                    )));
                }
            }
        }
        Ok(h)
    }

    /// The subgroup on the given indices as a group of its own, together
    /// with the map new-index -> old-index (sorted ascending, identity first).
    pub fn subgroup(&self, indices: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let h = self.check_subgroup(indices)?;
        let pos = |e: usize| h.binary_search(&e).unwrap();
        let table: Vec<Vec<usize>> =
            h.iter().map(|&a| h.iter().map(|&b| pos(self.mul(a, b))).collect()).collect();
        let g = FiniteGroup::from_table(table)?;
        Ok((g, h))
    }
}

/// For each group element and dimension, where each cell goes and with what
/// sign. `maps[g][k][cell] = (image, sign)` with sign in {+1, -1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedAction {
    maps: Vec<Vec<Vec<(usize, i64)>>>,
}

impl SignedAction {
    pub fn new(maps: Vec<Vec<Vec<(usize, i64)>>>) -> Self {
        SignedAction { maps }
    }

    /// Every element fixes every cell with sign +1.
    pub fn trivial(order: usize, cell_counts: &[usize]) -> Self {
        let per_elt: Vec<Vec<(usize, i64)>> =
            cell_counts.iter().map(|&n| (0..n).map(|c| (c, 1)).collect()).collect();
        SignedAction { maps: vec![per_elt; order] }
    }

    pub fn elements(&self) -> usize {
        self.maps.len()
    }

    pub fn dims(&self, g: usize) -> usize {
        self.maps[g].len()
    }

    pub fn apply(&self, g: usize, k: usize, cell: usize) -> (usize, i64) {
        self.maps[g][k][cell]
    }

    pub fn per_dim(&self, g: usize, k: usize) -> &[(usize, i64)] {
        &self.maps[g][k]
    }

    /// The signed permutation matrix of element g in dimension k:
    /// column `cell` has `sign` in row `image`.
    pub fn matrix(&self, g: usize, k: usize) -> IntMatrix {
        let n = self.maps[g][k].len();
        let mut m = IntMatrix::zeros(n, n);
        for (cell, &(image, sign)) in self.maps[g][k].iter().enumerate() {
            m.set(image, cell, BigInt::from(sign));
        }
        m
    }

    pub fn raw(&self) -> &Vec<Vec<Vec<(usize, i64)>>> {
        &self.maps
    }
}

/// A finite chain complex of free abelian groups, given by cell counts per
/// dimension and boundary matrices. `boundary(k)` maps dimension-k columns
/// to dimension-(k-1) rows and is zero outside the supported range, so
/// homology code never special-cases the ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    cell_counts: Vec<usize>,
    /// boundaries[k] = ∂_k for 1 <= k <= d; boundaries[0] is a 0 x c_0 stub.
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// `boundaries` lists ∂_1, ..., ∂_d (one fewer than `cell_counts`).
    pub fn new(cell_counts: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if cell_counts.is_empty() {
            if !boundaries.is_empty() {
                return Err(Error::InvalidComplex(
                    "boundaries listed for a complex with no cells".into(),
                ));
            }
            return Ok(ChainComplex { cell_counts, boundaries: vec![] });
        }
        if boundaries.len() + 1 != cell_counts.len() {
            return Err(Error::InvalidComplex(format!(
                "expected {} boundary matrices for top dimension {}, got {}",
                cell_counts.len() - 1,
                cell_counts.len() - 1,
                boundaries.len()
            )));
        }
        let mut stored = Vec::with_capacity(cell_counts.len());
        stored.push(IntMatrix::zeros(0, cell_counts[0]));
        for (k, b) in boundaries.into_iter().enumerate() {
            let k = k + 1;
            if b.rows() != cell_counts[k - 1] || b.cols() != cell_counts[k] {
                return Err(Error::InvalidComplex(format!(
                    "boundary {k} has shape {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    cell_counts[k - 1],
                    cell_counts[k]
                )));
            }
            stored.push(b);
        }
        Ok(ChainComplex { cell_counts, boundaries: stored })
    }

    pub fn empty() -> Self {
        ChainComplex { cell_counts: vec![], boundaries: vec![] }
    }

    /// Top dimension; -1 for the empty complex.
    pub fn top_dim(&self) -> i64 {
        self.cell_counts.len() as i64 - 1
    }

    pub fn cells(&self, k: i64) -> usize {
        if k < 0 || k >= self.cell_counts.len() as i64 {
            0
        } else {
            self.cell_counts[k as usize]
        }
    }

    pub fn cell_counts(&self) -> &[usize] {
        &self.cell_counts
    }

    pub fn total_cells(&self) -> usize {
        self.cell_counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total_cells() == 0
    }

    /// ∂_k, zero-extended outside 1..=top_dim.
    pub fn boundary(&self, k: i64) -> IntMatrix {
        if k >= 1 && k <= self.top_dim() {
            self.boundaries[k as usize].clone()
        } else {
            IntMatrix::zeros(self.cells(k - 1), self.cells(k))
        }
    }

    /// First (dimension, cell) where ∂∘∂ fails to vanish.
    pub fn d_squared_violation(&self) -> Option<(i64, usize)> {
        for k in 2..=self.top_dim() {
            let m = self.boundary(k - 1).mul(&self.boundary(k));
            for j in 0..m.cols() {
                if (0..m.rows()).any(|i| !m.get(i, j).is_zero()) {
                    return Some((k, j));
                }
            }
        }
        None
    }

    /// The boundary matrices ∂_1..∂_d (no stub), for serialization.
    pub fn boundary_list(&self) -> Vec<IntMatrix> {
        self.boundaries.iter().skip(1).cloned().collect()
    }
}

/// A finite group acting by signed cell permutations on a finite chain
/// complex, with human-readable cell labels for diagnostics.
#[derive(Clone, Debug)]
pub struct EquivariantChainComplex {
    group: FiniteGroup,
    complex: ChainComplex,
    action: SignedAction,
    labels: Vec<Vec<String>>,
}

impl EquivariantChainComplex {
    pub fn new(
        group: FiniteGroup,
        complex: ChainComplex,
        action: SignedAction,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<Self> {
        let d = complex.cell_counts.len();
        if action.maps.len() != group.order() {
            return Err(Error::InvalidComplex(format!(
                "action lists {} elements, group has order {}",
                action.maps.len(),
                group.order()
            )));
        }
        for (g, per_elt) in action.maps.iter().enumerate() {
            if per_elt.len() != d {
                return Err(Error::InvalidComplex(format!(
                    "action of element {g} covers {} dimensions, complex has {}",
                    per_elt.len(),
                    d
                )));
            }
            for (k, per_dim) in per_elt.iter().enumerate() {
                if per_dim.len() != complex.cell_counts[k] {
                    return Err(Error::InvalidComplex(format!(
                        "action of element {g} in dim {k} covers {} cells, expected {}",
                        per_dim.len(),
                        complex.cell_counts[k]
                    )));
                }
                for (c, &(image, sign)) in per_dim.iter().enumerate() {
                    if image >= complex.cell_counts[k] {
                        return Err(Error::InvalidComplex(format!(
                            "action of element {g} sends dim-{k} cell {c} out of range"
                        )));
                    }
                    if sign != 1 && sign != -1 {
                        return Err(Error::InvalidComplex(format!(
                            "action sign of element {g} on dim-{k} cell {c} must be +1 or -1"
                        )));
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != d || l.iter().zip(&complex.cell_counts).any(|(v, &n)| v.len() != n) {
                    return Err(Error::InvalidComplex("label table shape mismatch".into()));
                }
                l
            }
            None => complex
                .cell_counts
                .iter()
                .enumerate()
                .map(|(k, &n)| (0..n).map(|c| format!("c{k}_{c}")).collect())
                .collect(),
        };
        Ok(EquivariantChainComplex { group, complex, action, labels })
    }

    /// The group acting trivially on a complex.
    pub fn with_trivial_action(group: FiniteGroup, complex: ChainComplex) -> Self {
        let action = SignedAction::trivial(group.order(), &complex.cell_counts);
        EquivariantChainComplex::new(group, complex, action, None).expect("trivial action is valid")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn action(&self) -> &SignedAction {
        &self.action
    }

    pub fn top_dim(&self) -> i64 {
        self.complex.top_dim()
    }

    pub fn cells(&self, k: i64) -> usize {
        self.complex.cells(k)
    }

    pub fn boundary(&self, k: i64) -> IntMatrix {
        self.complex.boundary(k)
    }

    pub fn apply(&self, g: usize, k: usize, cell: usize) -> (usize, i64) {
        self.action.apply(g, k, cell)
    }

    pub fn action_matrix(&self, g: usize, k: usize) -> IntMatrix {
        self.action.matrix(g, k)
    }

    pub fn label(&self, k: usize, cell: usize) -> &str {
        &self.labels[k][cell]
    }

    pub fn labels(&self) -> &Vec<Vec<String>> {
        &self.labels
    }

    /// All chain-level invariants, as a list of human-readable violations.
    /// Empty iff the complex is a valid admissible equivariant complex.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let d = self.top_dim();
        let n = self.group.order();

        for k in 2..=d {
            let m = self.boundary(k - 1).mul(&self.boundary(k));
            for j in 0..m.cols() {
                if (0..m.rows()).any(|i| !m.get(i, j).is_zero()) {
                    out.push(format!("square of boundary nonzero at dim {k}, cell {j}"));
                }
            }
        }

        for k in 0..=d {
            let k = k as usize;
            for c in 0..self.complex.cell_counts[k] {
                let (image, sign) = self.apply(0, k, c);
                if image != c || sign != 1 {
                    out.push(format!("identity acts nontrivially at dim {k}, cell {c}"));
                }
            }
        }

        for g in 0..n {
            for k in 0..=d {
                let k = k as usize;
                let mut seen = vec![usize::MAX; self.complex.cell_counts[k]];
                for c in 0..self.complex.cell_counts[k] {
                    let (image, _) = self.apply(g, k, c);
                    if seen[image] != usize::MAX {
                        out.push(format!(
                            "element {g} does not act bijectively at dim {k} (cells {} and {c} share image {image})",
                            seen[image]
                        ));
                    } else {
                        seen[image] = c;
                    }
                }
            }
        }

        for g in 0..n {
            for h in 0..n {
                let gh = self.group.mul(g, h);
                for k in 0..=d {
                    let k = k as usize;
                    for c in 0..self.complex.cell_counts[k] {
                        let (ih, sh) = self.apply(h, k, c);
                        let (igh2, sg) = self.apply(g, k, ih);
                        let (igh, s) = self.apply(gh, k, c);
                        if igh != igh2 || s != sg * sh {
                            out.push(format!(
                                "action violates multiplication at elements ({g},{h}), dim {k}, cell {c}"
                            ));
                        }
                    }
                }
            }
        }

        for g in 0..n {
            for k in 1..=d {
                let lhs = self.boundary(k).mul(&self.action_matrix(g, k as usize));
                let rhs = self.action_matrix(g, (k - 1) as usize).mul(&self.boundary(k));
                if lhs != rhs {
                    let j = (0..lhs.cols())
                        .find(|&j| (0..lhs.rows()).any(|i| lhs.get(i, j) != rhs.get(i, j)))
                        .unwrap_or(0);
                    out.push(format!(
                        "boundary does not commute with element {g} at dim {k}, cell {j}"
                    ));
                }
            }
        }

        for g in 1..n {
            for k in 0..=d {
                let k = k as usize;
                for c in 0..self.complex.cell_counts[k] {
                    let (image, sign) = self.apply(g, k, c);
                    if image == c && sign == -1 {
                        out.push(format!(
                            "admissibility: element {g} sends dim-{k} cell {} to minus itself",
                            self.label(k, c)
                        ));
                    }
                }
            }
        }

        out
    }

    /// Tensor product over the same group with the diagonal action and the
    /// usual sign rule ∂(σ⊗τ) = ∂σ⊗τ + (-1)^{|σ|} σ⊗∂τ. Cells of dimension
    /// n are pairs (σ_i, τ_{n-i}) in blocks of ascending i.
    pub fn tensor_product(&self, other: &EquivariantChainComplex) -> Result<EquivariantChainComplex> {
        if self.group != other.group {
            return Err(Error::InvalidComplex(
                "tensor factors must carry the same group".into(),
            ));
        }
        let (dx, dy) = (self.top_dim(), other.top_dim());
        if dx < 0 || dy < 0 {
            return EquivariantChainComplex::new(
                self.group.clone(),
                ChainComplex::empty(),
                SignedAction::new(vec![vec![]; self.group.order()]),
                None,
            );
        }
        let d = (dx + dy) as usize;

        // block offset of (i, n-i) pairs inside dimension n
        let pairs = |n: usize| -> Vec<(usize, usize)> {
            (0..=n)
                .filter(|&i| i as i64 <= dx && (n - i) as i64 <= dy)
                .map(|i| (i, n - i))
                .collect()
        };
        let mut cell_counts = Vec::with_capacity(d + 1);
        let mut offsets: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
        for n in 0..=d {
            let mut off = Vec::new();
            let mut total = 0;
            for &(i, j) in &pairs(n) {
                off.push(total);
                total += self.cells(i as i64) * other.cells(j as i64);
            }
            offsets.push(off);
            cell_counts.push(total);
        }
        let index_of = |n: usize, i: usize, a: usize, b: usize| -> usize {
            let ps = pairs(n);
            let pos = ps.iter().position(|&(pi, _)| pi == i).expect("valid block");
            offsets[n][pos] + a * other.cells((n - i) as i64) + b
        };

        let mut boundaries = Vec::new();
        for n in 1..=d {
            let mut b = IntMatrix::zeros(cell_counts[n - 1], cell_counts[n]);
            for &(i, j) in &pairs(n) {
                let bx = self.boundary(i as i64);
                let by = other.boundary(j as i64);
                for a in 0..self.cells(i as i64) {
                    for bb in 0..other.cells(j as i64) {
                        let col = index_of(n, i, a, bb);
                        if i >= 1 {
                            for r in 0..bx.rows() {
                                let v = bx.get(r, a);
                                if !v.is_zero() {
                                    let row = index_of(n - 1, i - 1, r, bb);
                                    b.set(row, col, b.get(row, col) + v);
                                }
                            }
                        }
                        if j >= 1 {
                            let sign = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                            for s in 0..by.rows() {
                                let v = by.get(s, bb);
                                if !v.is_zero() {
                                    let row = index_of(n - 1, i, a, s);
                                    b.set(row, col, b.get(row, col) + &sign * v);
                                }
                            }
                        }
                    }
                }
            }
            boundaries.push(b);
        }

        let mut maps = Vec::with_capacity(self.group.order());
        for g in 0..self.group.order() {
            let mut per_elt = Vec::with_capacity(d + 1);
            for n in 0..=d {
                let mut per_dim = vec![(0usize, 0i64); cell_counts[n]];
                for &(i, j) in &pairs(n) {
                    for a in 0..self.cells(i as i64) {
                        for bb in 0..other.cells(j as i64) {
                            let (ia, sa) = self.apply(g, i, a);
                            let (ib, sb) = other.apply(g, j, bb);
                            per_dim[index_of(n, i, a, bb)] = (index_of(n, i, ia, ib), sa * sb);
                        }
                    }
                }
                per_elt.push(per_dim);
            }
            maps.push(per_elt);
        }

        let mut labels = Vec::with_capacity(d + 1);
        for n in 0..=d {
            let mut per_dim = Vec::with_capacity(cell_counts[n]);
            for &(i, j) in &pairs(n) {
                for a in 0..self.cells(i as i64) {
                    for bb in 0..other.cells(j as i64) {
                        per_dim.push(format!("({})x({})", self.label(i, a), other.label(j, bb)));
                    }
                }
            }
            labels.push(per_dim);
        }

        let out = EquivariantChainComplex::new(
            self.group.clone(),
            ChainComplex::new(cell_counts, boundaries)?,
            SignedAction::new(maps),
            Some(labels),
        )?;
        let diagnostics = out.validate();
        if let Some(bad) = diagnostics.iter().find(|m| m.starts_with("admissibility")) {
            return Err(Error::NotAdmissible(format!("diagonal action: {bad}")));
        }
        if let Some(bad) = diagnostics.first() {
            return Err(Error::Internal(format!("tensor product invalid: {bad}")));
        }
        Ok(out)
    }

    /// Same cells and boundaries, action restricted to the subgroup on the
    /// given element indices.
    pub fn restrict_action(&self, subgroup_elements: &[usize]) -> Result<EquivariantChainComplex> {
        let (h, old_of_new) = self.group.subgroup(subgroup_elements)?;
        let maps: Vec<_> = old_of_new.iter().map(|&old| self.action.maps[old].clone()).collect();
        EquivariantChainComplex::new(
            h,
            self.complex.clone(),
            SignedAction::new(maps),
            Some(self.labels.clone()),
        )
    }
}

/// A degree-preserving map of chain complexes, one matrix per dimension
/// (target cells x source cells), zero outside the stored range.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    maps: Vec<IntMatrix>,
}

impl ChainMap {
    /// `maps[k]` for k = 0..=max(top dims); shorter lists are zero-extended.
    pub fn new(source: ChainComplex, target: ChainComplex, maps: Vec<IntMatrix>) -> Result<Self> {
        for (k, m) in maps.iter().enumerate() {
            if m.rows() != target.cells(k as i64) || m.cols() != source.cells(k as i64) {
                return Err(Error::InvalidComplex(format!(
                    "chain map in dim {k} has shape {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.cells(k as i64),
                    source.cells(k as i64)
                )));
            }
        }
        Ok(ChainMap { source, target, maps })
    }

    pub fn map(&self, k: i64) -> IntMatrix {
        if k >= 0 && (k as usize) < self.maps.len() {
            self.maps[k as usize].clone()
        } else {
            IntMatrix::zeros(self.target.cells(k), self.source.cells(k))
        }
    }

    /// First dimension where ∂ f ≠ f ∂, if any.
    pub fn boundary_violation(&self) -> Option<i64> {
        let top = self.source.top_dim().max(self.target.top_dim());
        (1..=top).find(|&k| {
            self.target.boundary(k).mul(&self.map(k)) != self.map(k - 1).mul(&self.source.boundary(k))
        })
    }

    pub fn is_chain_map(&self) -> bool {
        self.boundary_violation().is_none()
    }

    /// Whether the map intertwines two actions on its ends.
    pub fn is_equivariant(&self, src: &SignedAction, tgt: &SignedAction) -> bool {
        let top = self.source.top_dim().min(self.target.top_dim());
        for g in 0..src.elements().min(tgt.elements()) {
            for k in 0..=top {
                let k = k as usize;
                if tgt.matrix(g, k).mul(&self.map(k as i64))
                    != self.map(k as i64).mul(&src.matrix(g, k))
                {
                    return false;
                }
            }
        }
        true
    }
}
