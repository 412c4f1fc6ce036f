//! The long exact sequence relating quotient homology, invariant-chain
//! homology, and mod-p fixed-set homology, built from the short exact
//! sequence of complexes
//!
//! ```text
//!   0 -> C(X/G) --norm--> C(X)^G --restrict--> C(X^G; Z/p) -> 0
//! ```
//!
//! for a prime-order group, with an explicit snake-lemma connecting map.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abelian::{junction, AbelianGroup, GroupHom, IntMatrix};
use crate::complexes::EquivariantChainComplex;
use crate::error::{Error, Result};
use crate::functors::{fixed_complex, norm_map};
use crate::homology::{homology, induced_map, Coeff, GradedGroup};
use crate::report::Report;

/// One group in the sequence together with the map to its successor.
#[derive(Clone, Debug)]
pub struct LesEntry {
    pub degree: i64,
    pub name: String,
    pub group: AbelianGroup,
    /// `norm`, `restrict`, or `connecting`; empty on the terminal entry
    pub map_label: String,
    pub map_to_next: Option<GroupHom>,
}

/// ... -> H_n(X/G) -> H_n(G,X) -> H_n(X^G;Z/p) -> H_{n-1}(X/G) -> ...
/// listed from the top degree down to H_0(X^G;Z/p).
#[derive(Clone, Debug)]
pub struct LongExactSequence {
    pub p: u64,
    pub top: i64,
    pub entries: Vec<LesEntry>,
}

impl LongExactSequence {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `H_1(X/G) = Z --norm--> H_1(G,X) = Z --restrict--> ...`, one line
    /// per junction triple.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for chunk in self.entries.chunks(3) {
            let mut line = String::new();
            for (i, e) in chunk.iter().enumerate() {
                if i > 0 {
                    line.push_str(" --> ");
                }
                line.push_str(&format!("{} = {}", e.name, e.group.notation()));
            }
            if let Some(last) = chunk.last() {
                if last.map_to_next.is_some() {
                    line.push_str(" -->");
                } else {
                    line.push_str(" --> 0");
                }
            }
            out.push(line);
        }
        out
    }
}

/// How the mod-p cycle representative is lifted to an integral invariant
/// chain. Canonical coordinates live in 0..p-1; the alternate lift shifts
/// every nonzero coordinate down by p. A correct connecting map cannot see
/// the difference.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftPolicy {
    Canonical,
    Shifted,
}

struct LesData {
    p: u64,
    hq: GradedGroup,
    hg: GradedGroup,
    hf: GradedGroup,
    /// orbit count per dimension, fixed-orbit indices per dimension
    orbit_counts: Vec<usize>,
    fixed_positions: Vec<Vec<usize>>,
    stabilizer_orders: Vec<Vec<usize>>,
    inv_boundaries: Vec<IntMatrix>,
}

fn les_data(x: &EquivariantChainComplex) -> Result<LesData> {
    let (p, _) = x.group().prime_order_generator()?;
    let nm = norm_map(x)?;
    let fixed = fixed_complex(x)?;

    let hq = homology(&nm.coinvariants.complex, Coeff::Z)?;
    let hg = homology(&nm.invariants.complex, Coeff::Z)?;
    let hf = homology(&fixed.complex, Coeff::Zp(p))?;

    let d = x.top_dim();
    let mut orbit_counts = Vec::new();
    let mut fixed_positions = Vec::new();
    let mut stabilizer_orders = Vec::new();
    let mut inv_boundaries = Vec::new();
    for k in 0..=d {
        let orbits = nm.invariants.basis.orbits(k);
        orbit_counts.push(orbits.len());
        let pos = nm.invariants.basis.fixed_orbit_indices(k);
        // the fixed complex and the fixed orbits enumerate the same cells in
        // the same (ascending) order
        debug_assert_eq!(
            pos.iter().map(|&o| orbits[o].rep).collect::<Vec<_>>(),
            fixed.cells[k as usize]
        );
        fixed_positions.push(pos);
        stabilizer_orders.push(orbits.iter().map(|o| o.stabilizer_order).collect());
        inv_boundaries.push(nm.invariants.complex.boundary(k));
    }
    Ok(LesData {
        p,
        hq,
        hg,
        hf,
        orbit_counts,
        fixed_positions,
        stabilizer_orders,
        inv_boundaries,
    })
}

impl LesData {
    fn dim_count(&self) -> i64 {
        self.orbit_counts.len() as i64
    }

    /// restriction matrix in degree n: fixed cells x orbits, selecting the
    /// fixed-orbit coordinates of an invariant chain
    fn restriction_matrix(&self, n: i64) -> IntMatrix {
        if n < 0 || n >= self.dim_count() {
            return IntMatrix::zeros(0, 0);
        }
        let pos = &self.fixed_positions[n as usize];
        let mut m = IntMatrix::zeros(pos.len(), self.orbit_counts[n as usize]);
        for (i, &o) in pos.iter().enumerate() {
            m.set(i, o, BigInt::from(1));
        }
        m
    }

    /// snake-lemma connecting map H_n(X^G;Z/p) -> H_{n-1}(X/G)
    fn connecting(&self, n: i64, policy: LiftPolicy) -> Result<GroupHom> {
        let src = self.hf.at(n);
        let tgt = self.hq.at(n - 1);
        let mut cols = Vec::new();
        for i in 0..src.num_generators() {
            // mod-p cycle on the fixed cells, coordinates in 0..p-1
            let mut z = src.rep(i);
            if policy == LiftPolicy::Shifted {
                for e in z.iter_mut() {
                    if !e.is_zero() {
                        *e -= BigInt::from(self.p);
                    }
                }
            }
            // lift to an invariant chain supported on the fixed orbits
            let oc = self.orbit_counts[n as usize];
            let mut lift = vec![BigInt::from(0); oc];
            for (j, &o) in self.fixed_positions[n as usize].iter().enumerate() {
                lift[o] = z[j].clone();
            }
            // its boundary is a norm image; divide by the stabilizer orders
            let b = self.inv_boundaries[n as usize].mul_vec(&lift);
            let mut w = Vec::with_capacity(b.len());
            for (o, v) in b.iter().enumerate() {
                let s = BigInt::from(self.stabilizer_orders[(n - 1) as usize][o] as i64);
                let (q, r) = num_integer::Integer::div_rem(v, &s);
                if !r.is_zero() {
                    return Err(Error::Internal(format!(
                        "connecting map at degree {n}: boundary coordinate not divisible by the stabilizer order"
                    )));
                }
                w.push(q);
            }
            cols.push(tgt.project(&w)?);
        }
        let m = IntMatrix::from_columns(tgt.num_generators(), &cols);
        Ok(GroupHom::new(src.presentation(), tgt.presentation(), m))
    }
}

/// Build the sequence from degree `top` down to degree 0. Requires a
/// prime-order group. Degrees above the dimension of the complex contribute
/// trivial groups, so `top = dim + 1` yields a sequence exact at every
/// junction including the first.
pub fn build_les(x: &EquivariantChainComplex, top: i64) -> Result<LongExactSequence> {
    let data = les_data(x)?;
    let p = data.p;
    let top = top.max(0);
    let mut entries = Vec::new();
    for n in (0..=top).rev() {
        let norm_n = {
            let (src, tgt) = (data.hq.at(n), data.hg.at(n));
            let m = if n < data.dim_count() {
                // the norm is diagonal with the stabilizer orders
                let mut d = IntMatrix::zeros(data.orbit_counts[n as usize], data.orbit_counts[n as usize]);
                for (o, &s) in data.stabilizer_orders[n as usize].iter().enumerate() {
                    d.set(o, o, BigInt::from(s as i64));
                }
                d
            } else {
                IntMatrix::zeros(0, 0)
            };
            induced_map(&m, &src, &tgt)?
        };
        let restrict_n = induced_map(&data.restriction_matrix(n), &data.hg.at(n), &data.hf.at(n))?;
        let connect_n = if n > 0 && n < data.dim_count() {
            data.connecting(n, LiftPolicy::Canonical)?
        } else {
            GroupHom::zero(data.hf.at(n).presentation(), data.hq.at(n - 1).presentation())
        };

        entries.push(LesEntry {
            degree: n,
            name: format!("H_{n}(X/G)"),
            group: data.hq.group(n),
            map_label: "norm".into(),
            map_to_next: Some(norm_n),
        });
        entries.push(LesEntry {
            degree: n,
            name: format!("H_{n}(G,X)"),
            group: data.hg.group(n),
            map_label: "restrict".into(),
            map_to_next: Some(restrict_n),
        });
        entries.push(LesEntry {
            degree: n,
            name: format!("H_{n}(X^G;Z/{p})"),
            group: data.hf.group(n),
            map_label: if n > 0 { "connecting".into() } else { String::new() },
            map_to_next: if n > 0 { Some(connect_n) } else { None },
        });
    }
    Ok(LongExactSequence { p, top, entries })
}

/// The connecting homomorphisms recomputed under the alternate lift; they
/// must agree with the canonical ones entry for entry.
pub fn connecting_is_lift_independent(x: &EquivariantChainComplex, top: i64) -> Result<bool> {
    let data = les_data(x)?;
    for n in 1..=top.min(data.dim_count() - 1) {
        let a = data.connecting(n, LiftPolicy::Canonical)?;
        let b = data.connecting(n, LiftPolicy::Shifted)?;
        if a.matrix != b.matrix {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exactness at every interior junction, as the vanishing of the
/// kernel-mod-image subquotient (a single Smith computation per junction),
/// plus composite-zero and well-definedness checks for each map.
pub fn check_exact(les: &LongExactSequence) -> Report {
    let mut report = Report::new("check-exact", "");
    for (i, e) in les.entries.iter().enumerate() {
        if let Some(f) = &e.map_to_next {
            report.assert_that(
                &format!("{} {} map is well-defined", e.name, e.map_label),
                f.is_well_defined(),
                "sends relations to relations",
            );
        }
        if i == 0 {
            continue;
        }
        let incoming = match &les.entries[i - 1].map_to_next {
            Some(f) => f.clone(),
            None => continue,
        };
        // the terminal entry maps onto 0
        let outgoing = match &e.map_to_next {
            Some(g) => g.clone(),
            None => GroupHom::zero(
                crate::abelian::Presentation::canonical(&e.group),
                crate::abelian::Presentation::canonical(&AbelianGroup::trivial()),
            ),
        };
        let jc = junction(&incoming, &outgoing);
        let name = format!("exact at {}", e.name);
        if jc.is_exact() {
            report.pass(&name, "kernel equals image");
        } else if !jc.composite_zero {
            report.fail(&name, "consecutive composite is nonzero");
        } else {
            report.fail(&name, &format!("kernel/image = {}", jc.homology.notation()));
        }
    }
    report
}
