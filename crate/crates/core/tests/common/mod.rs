//! Shared helpers and bulk property runners used by the integration suites.
//!
//! The runners return the number of instances they exercised and panic on
//! the first violation, so both the named test files and the acceptance
//! gate can drive them.

#![allow(dead_code)]

use hankel_interp::{
    correct_table, hankel_minor_naive, hankel_poly_naive, hankel_sequence_jj, nodes_poly,
    resultant_minors_from_samples, sylvester_resultant, tau_seq, tilde_tau_seq,
    wprime_at_nodes, common_zero_from_samples, CorrectionStatus, DegreeSpec, FieldSpec,
    GeneratorSequence, InterpolationTable, Polynomial, SampleRatioTable, Scalar,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rationals() -> FieldSpec {
    FieldSpec::Rationals
}

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime_field(BigUint::from(p)).expect("prime modulus")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar(spec: &FieldSpec, v: i64) -> Scalar {
    spec.from_i64(v)
}

/// Small scalar: over the rationals an integer or a shallow fraction, over
/// a prime field a reduced random residue.
pub fn random_scalar(spec: &FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match spec {
        FieldSpec::Rationals => {
            let num = spec.from_i64(rng.gen_range(-9..=9));
            let den = spec.from_i64(rng.gen_range(1..=3));
            num.div(&den).expect("nonzero denominator")
        }
        FieldSpec::PrimeField(_) => spec.from_i64(rng.gen_range(0..=9999)),
    }
}

pub fn random_nonzero(spec: &FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = random_scalar(spec, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// n distinct nodes drawn from a window wide enough for every caller here.
pub fn distinct_nodes(spec: &FieldSpec, rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::with_capacity(n);
    while out.len() < n {
        let c = scalar(spec, rng.gen_range(-60..=60));
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Random polynomial of exact degree `deg`.
pub fn random_poly_exact(spec: &FieldSpec, rng: &mut ChaCha8Rng, deg: usize) -> Polynomial {
    let mut coeffs: Vec<Scalar> = (0..deg).map(|_| random_scalar(spec, rng)).collect();
    coeffs.push(random_nonzero(spec, rng));
    Polynomial::new(spec.clone(), coeffs)
}

pub fn random_sequence(spec: &FieldSpec, rng: &mut ChaCha8Rng, len: usize) -> GeneratorSequence {
    let entries = (0..len).map(|_| random_scalar(spec, rng)).collect();
    GeneratorSequence::new(spec.clone(), entries).expect("len >= 2")
}

pub fn table(spec: &FieldSpec, nodes: Vec<Scalar>, values: Vec<Scalar>) -> InterpolationTable {
    InterpolationTable::new(spec.clone(), nodes, values).expect("valid table")
}

/// Table sampling `p` at fresh distinct nodes, with every value nonzero.
pub fn nonzero_sample_table(
    spec: &FieldSpec,
    rng: &mut ChaCha8Rng,
    p: &Polynomial,
    n_rows: usize,
) -> InterpolationTable {
    loop {
        let nodes = distinct_nodes(spec, rng, n_rows);
        let values: Vec<Scalar> = nodes.iter().map(|x| p.eval(x)).collect();
        if values.iter().all(|v| !v.is_zero()) {
            return table(spec, nodes, values);
        }
    }
}

pub fn product(spec: &FieldSpec, items: impl IntoIterator<Item = Scalar>) -> Scalar {
    items.into_iter().fold(spec.one(), |acc, s| acc.mul(&s))
}

pub fn pow(base: &Scalar, exp: usize) -> Scalar {
    let mut acc = base.spec().one();
    for _ in 0..exp {
        acc = acc.mul(base);
    }
    acc
}

/// Naive cofactor-expansion determinant, independent of the library's
/// elimination code. Fine for the small windows used in tests.
pub fn det_cofactor(spec: &FieldSpec, rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    if n == 0 {
        return spec.one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = spec.zero();
    for (j, pivot) in rows[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, s)| s.clone())
                    .collect()
            })
            .collect();
        let term = pivot.mul(&det_cofactor(spec, &minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Window matrix c_{i+j} over the given row and column offsets.
pub fn hankel_window(seq: &GeneratorSequence, rows: &[usize], cols: &[usize]) -> Vec<Vec<Scalar>> {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| seq.entries()[i + j].clone()).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Bulk identity runners (acceptance criterion 8)
// ---------------------------------------------------------------------------

/// Three consecutive Hankel polynomials satisfy
/// H_k^2 P_{k-2} + (H_k h_{k-1,1} - H_{k-1} h_{k,1} - H_k H_{k-1} x) P_{k-1}
/// + H_{k-1}^2 P_k = 0, coefficientwise, everything computed naively.
pub fn run_jj_identity(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let specs = [rationals(), gf(10007)];
    let mut count = 0;
    while count < min_instances {
        let spec = &specs[count % 2];
        let kmax = r.gen_range(2..=6usize);
        let seq = random_sequence(spec, &mut r, 2 * kmax);
        for k in 2..=kmax {
            let p_k2 = hankel_poly_naive(&seq, k - 2).unwrap();
            let p_k1 = hankel_poly_naive(&seq, k - 1).unwrap();
            let p_k = hankel_poly_naive(&seq, k).unwrap();
            let h_k = hankel_minor_naive(&seq, k).unwrap();
            let h_k1 = hankel_minor_naive(&seq, k - 1).unwrap();
            let hk1_1 = p_k1.coeff_desc(1).clone();
            let hk_1 = p_k.coeff_desc(1).clone();

            let x = Polynomial::from_i64(spec, &[0, 1]);
            let mid = Polynomial::constant(h_k.mul(&hk1_1).sub(&h_k1.mul(&hk_1)))
                .sub(&x.scale(&h_k.mul(&h_k1)));
            let total = p_k2
                .poly()
                .scale(&h_k.mul(&h_k))
                .add(&mid.mul(&p_k1.poly()))
                .add(&p_k.poly().scale(&h_k1.mul(&h_k1)));
            assert!(
                total.is_zero(),
                "three-term identity violated at order {} for {:?}",
                k,
                seq.entries()
            );
            count += 1;
        }
    }
    count
}

/// Bordered-determinant link between three successive leading minors:
/// H_{k-2} H_k = H_{k-1} D1 - D2^2 where D1 drops row and column k-2 of the
/// order-k window and D2 drops row k-2 and column k-1.
pub fn run_sylvester_identity(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let specs = [rationals(), gf(10007)];
    let mut count = 0;
    while count < min_instances {
        let spec = &specs[count % 2];
        let k = r.gen_range(2..=6usize);
        let seq = random_sequence(spec, &mut r, 2 * k);
        let h_k = hankel_minor_naive(&seq, k).unwrap();
        let h_k1 = hankel_minor_naive(&seq, k - 1).unwrap();
        let h_k2 = hankel_minor_naive(&seq, k - 2).unwrap();
        let mut border_rows: Vec<usize> = (0..k - 2).collect();
        border_rows.push(k - 1);
        let full_cols: Vec<usize> = (0..k - 1).collect();
        let d1 = det_cofactor(spec, &hankel_window(&seq, &border_rows, &border_rows));
        let d2 = det_cofactor(spec, &hankel_window(&seq, &border_rows, &full_cols));
        assert_eq!(
            h_k2.mul(&h_k),
            h_k1.mul(&d1).sub(&d2.mul(&d2)),
            "bordered minor identity violated at order {} for {:?}",
            k,
            seq.entries()
        );
        count += 1;
    }
    count
}

/// Sum of G(x_j)/W'(x_j) over the nodes: zero when deg G < N-1, the leading
/// coefficient when deg G = N-1.
pub fn run_euler_lagrange(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let specs = [rationals(), gf(10007)];
    let mut count = 0;
    while count < min_instances {
        let spec = &specs[count % 2];
        let n_rows = r.gen_range(3..=8usize);
        let nodes = distinct_nodes(spec, &mut r, n_rows);
        let values: Vec<Scalar> = (0..n_rows).map(|_| random_nonzero(spec, &mut r)).collect();
        let t = table(spec, nodes, values);
        let wp = wprime_at_nodes(&t);
        let deg = r.gen_range(0..=n_rows - 1);
        let g = random_poly_exact(spec, &mut r, deg);
        let mut sum = spec.zero();
        for (x, w) in t.nodes().iter().zip(&wp) {
            sum = sum.add(&g.eval(x).div(w).unwrap());
        }
        let expected = if deg == n_rows - 1 {
            g.leading().unwrap().clone()
        } else {
            spec.zero()
        };
        assert_eq!(sum, expected, "node-sum identity violated, deg {} of {}", deg, n_rows);
        count += 1;
    }
    count
}

/// The order-N polynomial over the reciprocal-weight sums factors through
/// every node: it equals (-1)^{N(N-1)/2} / prod(y) * W(x), and its leading
/// minor is that same constant.
pub fn run_full_order_factorization(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let specs = [rationals(), gf(10007)];
    let mut count = 0;
    while count < min_instances {
        let spec = &specs[count % 2];
        let n_rows = r.gen_range(2..=7usize);
        let nodes = distinct_nodes(spec, &mut r, n_rows);
        let values: Vec<Scalar> = (0..n_rows).map(|_| random_nonzero(spec, &mut r)).collect();
        let t = table(spec, nodes, values);
        let ttau = tilde_tau_seq(&t, 2 * n_rows - 1).unwrap();
        let full = hankel_poly_naive(&ttau, n_rows).unwrap();
        let prod_y = product(spec, t.values().iter().cloned());
        let constant = spec.sign(n_rows * (n_rows - 1) / 2).div(&prod_y).unwrap();
        assert_eq!(
            full.poly(),
            nodes_poly(&t).scale(&constant),
            "order-N factorization violated for {} rows",
            n_rows
        );
        assert_eq!(full.leading_minor(), &constant);
        count += 1;
    }
    count
}

/// Adjacent split product identity: H_n({ttau}) H_m({tau}) =
/// H_{n+1}({ttau}) H_{m+1}({tau}) with m = N-1-n, minors by the naive oracle.
pub fn run_split_product_identity(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let specs = [rationals(), gf(10007)];
    let mut count = 0;
    while count < min_instances {
        let spec = &specs[count % 2];
        let n_rows = r.gen_range(3..=7usize);
        let nodes = distinct_nodes(spec, &mut r, n_rows);
        let values: Vec<Scalar> = (0..n_rows).map(|_| random_nonzero(spec, &mut r)).collect();
        let t = table(spec, nodes, values);
        let tau = tau_seq(&t, 2 * n_rows);
        let ttau = tilde_tau_seq(&t, 2 * n_rows).unwrap();
        for n in 0..n_rows {
            let m = n_rows - 1 - n;
            let lhs = hankel_minor_naive(&ttau, n)
                .unwrap()
                .mul(&hankel_minor_naive(&tau, m).unwrap());
            let rhs = hankel_minor_naive(&ttau, n + 1)
                .unwrap()
                .mul(&hankel_minor_naive(&tau, m + 1).unwrap());
            assert_eq!(lhs, rhs, "split product identity violated at n={} of N={}", n, n_rows);
            count += 1;
        }
    }
    count
}

/// Value-product mirror between the two weighted-sum families:
/// H_{m+1}({tau}) = (-1)^{N(N-1)/2} H_n({ttau}) prod(y), for every split.
pub fn run_value_product_mirror(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let specs = [rationals(), gf(10007)];
    let mut count = 0;
    while count < min_instances {
        let spec = &specs[count % 2];
        let n_rows = r.gen_range(3..=7usize);
        let nodes = distinct_nodes(spec, &mut r, n_rows);
        let values: Vec<Scalar> = (0..n_rows).map(|_| random_nonzero(spec, &mut r)).collect();
        let t = table(spec, nodes, values);
        let tau = tau_seq(&t, 2 * n_rows);
        let ttau = tilde_tau_seq(&t, 2 * n_rows).unwrap();
        let prod_y = product(spec, t.values().iter().cloned());
        let sign = spec.sign(n_rows * (n_rows - 1) / 2);
        for n in 0..n_rows {
            let m = n_rows - 1 - n;
            let lhs = hankel_minor_naive(&tau, m + 1).unwrap();
            let rhs = sign.mul(&hankel_minor_naive(&ttau, n).unwrap()).mul(&prod_y);
            assert_eq!(lhs, rhs, "value-product mirror violated at n={} of N={}", n, n_rows);
            count += 1;
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Recursive-vs-naive ladder sweep (acceptance criterion 7)
// ---------------------------------------------------------------------------

/// Random and forced-degenerate sequences: the recursive ladder must match
/// the naive one coefficientwise at every order.
pub fn run_ladder_equivalence(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let specs = [rationals(), gf(10007)];
    let mut count = 0;
    while count < min_instances {
        let spec = &specs[count % 2];
        let kmax = r.gen_range(1..=8usize);
        let mut entries: Vec<Scalar> = (0..2 * kmax)
            .map(|_| scalar(spec, r.gen_range(-4..=4)))
            .collect();
        // every third instance: plant H_k = 0 by solving for the last window
        // entry (linear, cofactor H_{k-1}) so the degenerate branches fire
        if count % 3 == 0 && kmax >= 2 {
            let k = r.gen_range(2..=kmax);
            let prefix = GeneratorSequence::new(spec.clone(), entries[..2 * k - 1].to_vec())
                .expect("len >= 2");
            let cof = hankel_minor_naive(&prefix, k - 1).unwrap();
            if !cof.is_zero() {
                // H_k = cof * c_{2k-2} + rest; zero the slot and solve
                entries[2 * k - 2] = spec.zero();
                let probe = GeneratorSequence::new(spec.clone(), entries[..2 * k - 1].to_vec())
                    .expect("len >= 2");
                let rest = hankel_minor_naive(&probe, k).unwrap();
                entries[2 * k - 2] = rest.div(&cof).unwrap().neg();
            }
        }
        let seq = GeneratorSequence::new(spec.clone(), entries).expect("len >= 2");
        let ladder = hankel_sequence_jj(&seq, kmax).unwrap();
        assert_eq!(ladder.len(), kmax);
        for (i, h) in ladder.iter().enumerate() {
            let reference = hankel_poly_naive(&seq, i + 1).unwrap();
            assert_eq!(
                h.coeffs(),
                reference.coeffs(),
                "ladder mismatch at order {} for {:?}",
                i + 1,
                seq.entries()
            );
        }
        count += 1;
    }
    count
}

// ---------------------------------------------------------------------------
// Decode round trip (acceptance criterion 9)
// ---------------------------------------------------------------------------

/// Random generating polynomial, random corruption within the redundancy
/// budget, exact recovery of both the polynomial and the corrupted rows.
pub fn run_decode_roundtrip(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let mut count = 0;
    while count < min_instances {
        let spec = if count % 5 < 3 { gf(10007) } else { rationals() };
        let n_rows = match &spec {
            FieldSpec::Rationals => r.gen_range(5..=10usize),
            FieldSpec::PrimeField(_) => r.gen_range(5..=15usize),
        };
        // need E >= 1 with n < N - 2E
        let e = r.gen_range(1..=(n_rows - 1) / 2);
        let max_deg = n_rows - 2 * e - 1;
        let deg = r.gen_range(0..=max_deg.min(6));
        let p = random_poly_exact(&spec, &mut r, deg);
        let t = nonzero_sample_table(&spec, &mut r, &p, n_rows);

        let mut rows: Vec<usize> = (0..n_rows).collect();
        for i in 0..e {
            let j = r.gen_range(i..n_rows);
            rows.swap(i, j);
        }
        let mut corrupted: Vec<usize> = rows[..e].to_vec();
        corrupted.sort_unstable();
        let mut values = t.values().to_vec();
        for &i in &corrupted {
            loop {
                let fresh = random_nonzero(&spec, &mut r);
                if fresh != values[i] {
                    values[i] = fresh;
                    break;
                }
            }
        }
        let damaged = table(&spec, t.nodes().to_vec(), values);

        let degree = if count % 2 == 0 { DegreeSpec::Fixed(deg) } else { DegreeSpec::Auto };
        let report = correct_table(&damaged, degree, None).expect("inputs satisfy preconditions");
        assert_eq!(
            report.status,
            CorrectionStatus::Corrected,
            "expected a correction: N={} deg={} E={} field={:?}",
            n_rows,
            deg,
            e,
            spec
        );
        assert_eq!(report.recovered.as_ref(), Some(&p), "wrong polynomial recovered");
        let expected_nodes: Vec<Scalar> =
            corrupted.iter().map(|&i| damaged.nodes()[i].clone()).collect();
        assert_eq!(report.error_nodes, expected_nodes, "wrong rows located");
        count += 1;
    }
    count
}

/// Uncorrupted redundant tables must come back Clean with zero error rows
/// and the generator unchanged.
pub fn run_clean_table_decode(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let mut count = 0;
    while count < min_instances {
        let spec = if count % 2 == 0 { gf(10007) } else { rationals() };
        let n_rows = r.gen_range(4..=10usize);
        let deg = r.gen_range(0..=n_rows - 2);
        let p = random_poly_exact(&spec, &mut r, deg);
        let t = nonzero_sample_table(&spec, &mut r, &p, n_rows);
        let degree = if count % 2 == 0 { DegreeSpec::Fixed(deg) } else { DegreeSpec::Auto };
        let report = correct_table(&t, degree, None).expect("inputs satisfy preconditions");
        assert_eq!(report.status, CorrectionStatus::Clean, "N={} deg={}", n_rows, deg);
        assert_eq!(report.error_count, 0);
        assert!(report.error_nodes.is_empty());
        assert_eq!(report.recovered.as_ref(), Some(&p));
        count += 1;
    }
    count
}

// ---------------------------------------------------------------------------
// Resultant sweeps (acceptance criterion 10)
// ---------------------------------------------------------------------------

/// Builds a split-root polynomial c * prod (x - root) so every zero is known.
pub fn poly_from_roots(lead: &Scalar, roots: &[Scalar]) -> Polynomial {
    let mut p = Polynomial::constant(lead.clone());
    for root in roots {
        p = p.mul(&Polynomial::linear_root(root));
    }
    p
}

/// Sample table for a pair (p, q): n + m + 1 nodes where neither vanishes,
/// ratios p(x)/q(x).
pub fn ratio_samples(
    spec: &FieldSpec,
    rng: &mut ChaCha8Rng,
    p: &Polynomial,
    q: &Polynomial,
) -> SampleRatioTable {
    let n = p.degree().expect("nonzero p");
    let m = q.degree().expect("nonzero q");
    let rows = n + m + 1;
    let mut nodes: Vec<Scalar> = Vec::with_capacity(rows);
    while nodes.len() < rows {
        let x = scalar(spec, rng.gen_range(-60..=60));
        if nodes.contains(&x) || p.eval(&x).is_zero() || q.eval(&x).is_zero() {
            continue;
        }
        nodes.push(x);
    }
    let ratios: Vec<Scalar> =
        nodes.iter().map(|x| p.eval(x).div(&q.eval(x)).unwrap()).collect();
    SampleRatioTable::new(spec.clone(), nodes, ratios, n, m).expect("valid samples")
}

/// Distinct scalars avoiding an exclusion list, for root constructions.
fn fresh_roots(
    spec: &FieldSpec,
    rng: &mut ChaCha8Rng,
    n: usize,
    avoid: &[Scalar],
) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::with_capacity(n);
    while out.len() < n {
        let c = scalar(spec, rng.gen_range(-30..=30));
        if !out.contains(&c) && !avoid.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// The four sampled minors against their closed forms in terms of the
/// resultant, plus the swap law and the shared-root verdict, on pairs with
/// fully known roots.
pub fn run_resultant_identities(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let specs = [rationals(), gf(10007)];
    let mut count = 0;
    while count < min_instances {
        let spec = &specs[count % 2];
        let n = r.gen_range(1..=3usize);
        let m = r.gen_range(1..=3usize);
        let shared = count % 3 == 0;

        let p_roots = fresh_roots(spec, &mut r, n, &[]);
        let mut q_roots = fresh_roots(spec, &mut r, m, &p_roots);
        if shared {
            q_roots[0] = p_roots[0].clone();
        }
        let p0 = random_nonzero(spec, &mut r);
        let q0 = random_nonzero(spec, &mut r);
        let p = poly_from_roots(&p0, &p_roots);
        let q = poly_from_roots(&q0, &q_roots);

        let res = sylvester_resultant(&p, &q).unwrap();
        let res_swapped = sylvester_resultant(&q, &p).unwrap();
        assert_eq!(res, res_swapped.mul(&spec.sign(n * m)), "swap law violated");
        assert_eq!(res.is_zero(), shared, "vanishing must track the shared-root construction");

        let samples = ratio_samples(spec, &mut r, &p, &q);
        let minors = resultant_minors_from_samples(&samples);
        assert_eq!(minors.shared_root(), shared, "sample verdict must track construction");

        let prod_p = product(spec, samples.nodes().iter().map(|x| p.eval(x)));
        let prod_q = product(spec, samples.nodes().iter().map(|x| q.eval(x)));
        let sign_m = spec.sign(m * (m + 1) / 2);
        let sign_n = spec.sign(m * n + n * (n + 1) / 2);
        assert_eq!(minors.h_m_tau, sign_m.mul(&q0).div(&prod_q).unwrap().mul(&res));
        assert_eq!(minors.h_m1_tau, sign_m.mul(&p0).div(&prod_q).unwrap().mul(&res));
        assert_eq!(minors.h_n_ttau, sign_n.mul(&p0).div(&prod_p).unwrap().mul(&res));
        assert_eq!(minors.h_n1_ttau, sign_n.mul(&q0).div(&prod_p).unwrap().mul(&res));
        if !shared {
            assert_eq!(
                minors.h_n1_ttau.div(&minors.h_n_ttau).unwrap(),
                q0.div(&p0).unwrap(),
                "adjacent-minor quotient must be q0/p0"
            );
        }
        count += 1;
    }
    count
}

/// Pairs constructed with exactly one planted common zero; the sample-side
/// formula must return it every time.
pub fn run_common_zero_recovery(seed: u64, min_instances: usize) -> usize {
    let mut r = rng(seed);
    let specs = [rationals(), gf(10007)];
    let mut count = 0;
    while count < min_instances {
        let spec = &specs[count % 2];
        let shared_root = scalar(spec, r.gen_range(-20..=20));
        let n = r.gen_range(1..=3usize);
        let m = r.gen_range(1..=3usize);
        let p_rest = fresh_roots(spec, &mut r, n - 1, &[shared_root.clone()]);
        let mut avoid = p_rest.clone();
        avoid.push(shared_root.clone());
        let q_rest = fresh_roots(spec, &mut r, m - 1, &avoid);
        let p0 = random_nonzero(spec, &mut r);
        let q0 = random_nonzero(spec, &mut r);
        let mut p_roots = vec![shared_root.clone()];
        p_roots.extend(p_rest);
        let mut q_roots = vec![shared_root.clone()];
        q_roots.extend(q_rest);
        let p = poly_from_roots(&p0, &p_roots);
        let q = poly_from_roots(&q0, &q_roots);

        let samples = ratio_samples(spec, &mut r, &p, &q);
        let lambda = common_zero_from_samples(&samples, &p.coeff(n), &p.coeff(n - 1))
            .expect("planted common zero is unique");
        assert_eq!(lambda, shared_root, "planted zero not recovered");
        count += 1;
    }
    count
}
