//! Acceptance gate. One test per stated result; every comparison is exact
//! (integer / invariant-factor equality). `cargo test --test acceptance`
//! prints one ok/FAILED line per criterion.
//!
//! The fuzz corpora are deterministic. Set EQUICHAIN_SEED=<u64> to shift
//! every corpus to a fresh region of seed space.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use equichain::abelian::AbelianGroup;
use equichain::complexes::EquivariantChainComplex;
use equichain::functors::compare_d_to_fixed_mod_p;
use equichain::homology::{
    equivariant_homology, fixed_homology, homology, norm_induced, quotient_homology,
    rank_consistent, uct_consistent, Coeff, GradedGroup,
};
use equichain::hyper::collapse_check;
use equichain::les::{build_les, check_exact};
use equichain::spaces::{self, CrossAction};
use equichain::theorems::{
    conner_check, coprime_check, free_action_check, inclusion_kernel_bound, smith_check,
};

fn seed_base() -> u64 {
    std::env::var("EQUICHAIN_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

/// 500 deterministic random complexes, up to 120 cells each.
fn corpus() -> &'static Vec<(u64, EquivariantChainComplex)> {
    static CORPUS: OnceLock<Vec<(u64, EquivariantChainComplex)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let base = seed_base();
        (0..500).map(|i| (base + i, spaces::fuzz(base + i, 120))).collect()
    })
}

fn builtins() -> Vec<(String, EquivariantChainComplex)> {
    equichain::cli::builtin_instances()
        .into_iter()
        .map(|name| {
            (name.to_string(), spaces::builtin(name).expect("builtin catalog entry builds"))
        })
        .collect()
}

fn z() -> AbelianGroup {
    AbelianGroup::free(1)
}

fn zmod(n: u64) -> AbelianGroup {
    AbelianGroup::cyclic(n)
}

fn zero() -> AbelianGroup {
    AbelianGroup::trivial()
}

/// Circle with the arc-swapping reflection: H_1(G,X;Z) = 0,
/// H_0 = Z + Z/2, and the degree-0 norm junction doubles the vertex class.
#[test]
fn criterion_01_circle_reflection_invariant_homology_and_junction() {
    let x = spaces::circle_reflection();
    let hg = equivariant_homology(&x, Coeff::Z).unwrap();
    assert_eq!(hg.group(1), zero());
    assert_eq!(hg.group(0), AbelianGroup::new(1, vec![BigInt::from(2)]));

    let n = norm_induced(&x, Coeff::Z).unwrap();
    assert_eq!(n.coinvariant_homology.group(0), z());
    assert_eq!(n.coinvariant_homology.group(1), zero());

    // Both chain models are indexed by the same orbit list, so the quotient
    // generator's representative re-reads as an invariant chain. The induced
    // norm column must be the class of exactly twice that chain: the
    // junction sends the quotient vertex class to 2x the invariant one.
    let rep = n.coinvariant_homology.at(0).rep(0);
    let doubled: Vec<BigInt> = rep.iter().map(|v| v * 2).collect();
    let expected = n.invariant_homology.at(0).project(&doubled).unwrap();
    assert_eq!(n.maps[0].matrix.column(0), expected);
    assert!(n.maps[0].is_well_defined());
    assert!(!n.maps[0].is_isomorphism(), "the norm must miss the torsion class");
    println!("criterion 01: circle_reflection H(G,X) and H_0 junction map verified");
}

/// Free rotation of the circle: H(G,X) = (Z, Z) and the norm induces
/// isomorphisms in both degrees, for p = 2, 3, 5.
#[test]
fn criterion_02_circle_rotation_norm_isomorphisms() {
    for p in [2usize, 3, 5] {
        let x = spaces::circle_rotation(p).unwrap();
        let hg = equivariant_homology(&x, Coeff::Z).unwrap();
        assert_eq!(hg.group(1), z(), "p = {p}");
        assert_eq!(hg.group(0), z(), "p = {p}");
        let n = norm_induced(&x, Coeff::Z).unwrap();
        for k in 0..=1 {
            assert!(n.maps[k].is_well_defined(), "p = {p}, degree {k}");
            assert!(n.maps[k].is_isomorphism(), "p = {p}, degree {k}");
        }
    }
    println!("criterion 02: circle_rotation(2,3,5) norm isomorphisms verified");
}

/// Sphere with reflection: H(G,X) = (Z, Z/2, 0); in the long exact sequence
/// the degree-1 restriction is the identity Z/2 -> Z/2 and the degree-0
/// norm junction Z -> Z is multiplication by 2.
#[test]
fn criterion_03_sphere_reflection_les_junction_maps() {
    let x = spaces::sphere_reflection();
    let hg = equivariant_homology(&x, Coeff::Z).unwrap();
    assert_eq!(hg.group(2), zero());
    assert_eq!(hg.group(1), zmod(2));
    assert_eq!(hg.group(0), z());

    let les = build_les(&x, 3).unwrap();
    let restrict1 = les
        .entries
        .iter()
        .find(|e| e.degree == 1 && e.name == "H_1(G,X)")
        .and_then(|e| e.map_to_next.as_ref())
        .expect("degree-1 restriction entry");
    assert_eq!(restrict1.domain.group(), zmod(2));
    assert_eq!(restrict1.codomain.group(), AbelianGroup::vector_space(2, 1));
    assert!(restrict1.matrix.get(0, 0).is_odd(), "generator must map to generator");
    assert!(restrict1.is_isomorphism(), "Z/2 -> Z/2 isomorphism is the identity");

    let norm0 = les
        .entries
        .iter()
        .find(|e| e.degree == 0 && e.name == "H_0(X/G)")
        .and_then(|e| e.map_to_next.as_ref())
        .expect("degree-0 norm entry");
    assert_eq!(norm0.domain.group(), z());
    assert_eq!(norm0.codomain.group(), z());
    assert_eq!(norm0.matrix.get(0, 0).abs(), BigInt::from(2));
    println!("criterion 03: sphere_reflection homology and LES junction maps verified");
}

/// The norm cokernel D(X) is the mod-p chain complex of the fixed
/// subcomplex — dimensions and boundary matrices both — on every builtin
/// and 500 fuzzed complexes.
#[test]
fn criterion_04_norm_cokernel_is_fixed_subcomplex_mod_p() {
    for (name, x) in builtins() {
        let cmp = compare_d_to_fixed_mod_p(&x).unwrap();
        assert!(cmp.is_isomorphism(), "builtin {name}");
    }
    for (seed, x) in corpus() {
        let cmp = compare_d_to_fixed_mod_p(x).unwrap();
        assert!(cmp.is_isomorphism(), "fuzz seed {seed}");
    }
    println!("criterion 04: D = C(X^G; Z/p) on {} builtins + 500 fuzzed", builtins().len());
}

/// The quotient/invariant/fixed long exact sequence is exact at every
/// junction, on every builtin and 500 fuzzed complexes.
#[test]
fn criterion_05_les_exact_everywhere() {
    for (name, x) in builtins() {
        let les = build_les(&x, x.top_dim() + 1).unwrap();
        let report = check_exact(&les);
        assert!(report.passed(), "builtin {name}:\n{}", report.render_text());
    }
    for (seed, x) in corpus() {
        let les = build_les(x, x.top_dim() + 1).unwrap();
        let report = check_exact(&les);
        assert!(report.passed(), "fuzz seed {seed}:\n{}", report.render_text());
    }
    println!("criterion 05: LES exactness on {} builtins + 500 fuzzed", builtins().len());
}

/// |G| kills the kernel of H(G,X) -> H(X) in every degree.
#[test]
fn criterion_06_inclusion_kernel_killed_by_group_order() {
    for (name, x) in builtins() {
        let report = inclusion_kernel_bound(&x).unwrap();
        assert!(report.passed(), "builtin {name}:\n{}", report.render_text());
    }
    for (seed, x) in corpus() {
        let report = inclusion_kernel_bound(x).unwrap();
        assert!(report.passed(), "fuzz seed {seed}:\n{}", report.render_text());
    }
    println!("criterion 06: inclusion kernel bound on {} builtins + 500 fuzzed", builtins().len());
}

/// Free actions: H(G,X) equals the homology of the coinvariant complex.
/// Antipodal cross-polytope spheres up to S^4 (S^2 literally gives
/// Z, Z/2, 0) and lens spaces (Z, Z/p, 0, Z).
#[test]
fn criterion_07_free_actions_match_quotient_homology() {
    for n in 1..=4usize {
        let x = spaces::cross_polytope_sphere(n, CrossAction::Antipodal).unwrap();
        let a = equivariant_homology(&x, Coeff::Z).unwrap();
        let b = quotient_homology(&x, Coeff::Z).unwrap();
        let top = a.top_dim().max(b.top_dim());
        for k in 0..=top {
            assert_eq!(a.group(k), b.group(k), "antipodal S^{n}, degree {k}");
        }
        assert!(free_action_check(&x).unwrap().passed(), "antipodal S^{n}");
        if n == 2 {
            assert_eq!(a.groups(), vec![z(), zmod(2), zero()]);
        }
    }
    for p in [2u64, 3, 5] {
        let x = spaces::lens_sphere(p as usize).unwrap();
        let a = equivariant_homology(&x, Coeff::Z).unwrap();
        assert_eq!(a.groups(), vec![z(), zmod(p), zero(), z()], "lens p = {p}");
        let b = quotient_homology(&x, Coeff::Z).unwrap();
        assert_eq!(a.groups(), b.groups(), "lens p = {p}");
    }
    println!("criterion 07: free-action comparison on antipodal S^1..S^4 and lens 2,3,5");
}

/// With coefficients coprime to |G|, invariant-chain homology equals
/// quotient homology; sphere_reflection over Z/3 is (Z/3, 0, 0).
#[test]
fn criterion_08_coprime_coefficients() {
    let cases: Vec<(&str, EquivariantChainComplex, u64)> = vec![
        ("sphere_reflection", spaces::sphere_reflection(), 3),
        ("circle_reflection", spaces::circle_reflection(), 3),
        ("circle_reflection", spaces::circle_reflection(), 5),
        ("circle_rotation(3)", spaces::circle_rotation(3).unwrap(), 2),
    ];
    for (name, x, l) in cases {
        let report = coprime_check(&x, l).unwrap();
        assert!(report.passed(), "{name} with l = {l}:\n{}", report.render_text());
    }
    let h = equivariant_homology(&spaces::sphere_reflection(), Coeff::Zp(3)).unwrap();
    assert_eq!(
        h.groups(),
        vec![AbelianGroup::vector_space(3, 1), zero(), zero()]
    );
    println!("criterion 08: coprime-coefficient comparisons verified");
}

/// The column-filtered spectral sequence collapses at the second page:
/// E^2 = E^infinity over GF(p), where the limit page is read off the
/// filtration of H(Tot) rather than by iterating pages.
#[test]
fn criterion_09_column_spectral_sequence_collapses_at_e2() {
    for (name, x) in builtins() {
        let report = collapse_check(&x).unwrap();
        assert!(report.passed(), "builtin {name}:\n{}", report.render_text());
    }
    let base = seed_base() + 1000;
    for i in 0..150u64 {
        let x = spaces::fuzz(base + i, 60);
        let report = collapse_check(&x).unwrap();
        assert!(report.passed(), "fuzz seed {}", base + i);
    }
    println!(
        "criterion 09: E^2 = E^infinity on {} builtins + 150 fuzzed",
        builtins().len()
    );
}

/// Smith theory: fixed sets of Z/p actions on mod-p homology spheres are
/// empty or mod-p homology spheres, with total fixed Betti number 0 or 2.
#[test]
fn criterion_10_smith_fixed_point_classification() {
    let named: Vec<(String, EquivariantChainComplex)> = vec![
        ("sphere_reflection".into(), spaces::sphere_reflection()),
        ("circle_reflection".into(), spaces::circle_reflection()),
        ("circle_rotation(2)".into(), spaces::circle_rotation(2).unwrap()),
        ("circle_rotation(3)".into(), spaces::circle_rotation(3).unwrap()),
        ("circle_rotation(5)".into(), spaces::circle_rotation(5).unwrap()),
        ("lens_sphere(2)".into(), spaces::lens_sphere(2).unwrap()),
        ("lens_sphere(3)".into(), spaces::lens_sphere(3).unwrap()),
        ("lens_sphere(5)".into(), spaces::lens_sphere(5).unwrap()),
    ];
    for (name, x) in named {
        let report = smith_check(&x).unwrap();
        assert!(report.passed(), "{name}:\n{}", report.render_text());
    }
    for n in 1..=4usize {
        let x = spaces::cross_polytope_sphere(n, CrossAction::Antipodal).unwrap();
        let report = smith_check(&x).unwrap();
        assert!(report.passed(), "antipodal S^{n}:\n{}", report.render_text());
    }

    // the two reflections fix the spheres one dimension down
    let f2 = fixed_homology(&spaces::sphere_reflection(), Coeff::Zp(2)).unwrap();
    assert_eq!(f2.group(0), AbelianGroup::vector_space(2, 1));
    assert_eq!(f2.group(1), AbelianGroup::vector_space(2, 1)); // a circle
    let f1 = fixed_homology(&spaces::circle_reflection(), Coeff::Zp(2)).unwrap();
    assert_eq!(f1.group(0), AbelianGroup::vector_space(2, 2)); // two points
    assert_eq!(f1.group(1), zero());
    println!("criterion 10: Smith classification on spheres, reflections, rotations, lens");
}

/// Acyclic ambient complexes have acyclic quotients (prime-order case),
/// with the stated hypercohomology pattern along the way.
#[test]
fn criterion_11_acyclic_complexes_have_acyclic_quotients() {
    for p in [2usize, 3, 5] {
        let x = spaces::cone_of(&spaces::circle_rotation(p).unwrap()).unwrap();
        let report = conner_check(&x).unwrap();
        assert!(report.passed(), "cone over rotation circle, p = {p}:\n{}", report.render_text());
    }
    let x = spaces::cone_of(
        &spaces::cross_polytope_sphere(2, CrossAction::Antipodal).unwrap(),
    )
    .unwrap();
    let report = conner_check(&x).unwrap();
    assert!(report.passed(), "cone over antipodal S^2:\n{}", report.render_text());
    println!("criterion 11: acyclic-quotient checks on 4 cones");
}

/// Complex conjugation on the projective line, mod 2: the invariant-chain
/// homology is Z/2 in degrees 1 and 2.
#[test]
fn criterion_12_projective_line_conjugation_mod_2() {
    let x = spaces::cp1_conjugation();
    let h = equivariant_homology(&x, Coeff::Zp(2)).unwrap();
    assert_eq!(h.group(1), AbelianGroup::vector_space(2, 1));
    assert_eq!(h.group(2), AbelianGroup::vector_space(2, 1));
    println!("criterion 12: conjugation on the projective line verified mod 2");
}

/// Universal-coefficient and rational-rank consistency across models.
#[test]
fn criterion_13_universal_coefficients_and_rank_consistency() {
    type Model = fn(&EquivariantChainComplex, Coeff) -> equichain::Result<GradedGroup>;
    let total: Model = |x, c| homology(x.complex(), c);
    let models: [(&str, Model); 4] = [
        ("invariant", equivariant_homology),
        ("quotient", quotient_homology),
        ("fixed", fixed_homology),
        ("total", total),
    ];
    let check = |name: &str, x: &EquivariantChainComplex, models: &[(&str, Model)]| {
        for (label, model) in models {
            let hz = model(x, Coeff::Z).unwrap();
            let hq = model(x, Coeff::Q).unwrap();
            assert!(rank_consistent(&hz, &hq), "{name}: {label} rational rank");
            for p in [2u64, 3, 5] {
                let hp = model(x, Coeff::Zp(p)).unwrap();
                assert!(uct_consistent(&hz, &hp, p), "{name}: {label} mod {p}");
            }
        }
    };
    for (name, x) in builtins() {
        check(&name, &x, &models);
    }
    for (seed, x) in corpus().iter().take(60) {
        check(&format!("fuzz seed {seed}"), x, &models[..2]);
    }
    println!("criterion 13: UCT + rank consistency on all builtins + 60 fuzzed");
}

/// Barycentric subdivision leaves invariant-chain homology unchanged.
#[test]
fn criterion_14_subdivision_invariance() {
    for (name, s) in spaces::simplicial_catalog() {
        let coarse = s.to_chain_complex().unwrap();
        let fine = s.barycentric_subdivision().to_chain_complex().unwrap();
        let a = equivariant_homology(&coarse, Coeff::Z).unwrap();
        let b = equivariant_homology(&fine, Coeff::Z).unwrap();
        let top = a.top_dim().max(b.top_dim());
        for k in 0..=top {
            assert_eq!(a.group(k), b.group(k), "{name}, degree {k}");
        }
    }
    println!("criterion 14: subdivision invariance on the simplicial catalog");
}
