//! Independent dense-matrix oracle for the exact engine.
//!
//! Where the engine manipulates characters, this module builds the actual
//! objects: unitary permutation matrices, isotypic projectors, induced
//! representations with their block projectors, the optimal input state,
//! and the coset measurement. Success probabilities come out of a direct
//! average over all hidden elements, with no character theory in the loop
//! beyond choosing which projectors to assemble. Agreement with the exact
//! formulas within 1e-8 is the end-to-end validation of both sides.
//!
//! Floating point with fixed tolerances: 1e-10 for structural identities
//! (homomorphism, unitarity, idempotence, completeness), 1e-8 for value
//! comparisons. The exact engine is the ground truth; this is the
//! approximate cross-examination.

use std::collections::HashMap;
use std::sync::Arc;

use nalgebra::{Complex, DMatrix, DVector};
use num_traits::ToPrimitive;

use crate::chartab::CharacterTable;
use crate::cyclotomic::format_rational;
use crate::engine::{self, CosetEngine, Mode, ProblemSpec, RepSource, SubgroupChoice};
use crate::error::{Error, Result};
use crate::group::{Elem, Group, GroupAction};
use crate::repcalc::{power_support, IrrepSet};

type C64 = Complex<f64>;
type CMat = DMatrix<C64>;
type CVec = DVector<C64>;

pub const STRUCTURAL_TOL: f64 = 1e-10;
pub const COMPARISON_TOL: f64 = 1e-8;

fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// A unitary matrix per group element.
#[derive(Clone)]
pub struct MatrixRep {
    pub group: Group,
    pub elems: Vec<Elem>,
    pub matrices: Vec<CMat>,
    pub dim: usize,
    index: HashMap<Elem, usize>,
}

impl MatrixRep {
    fn new(group: Group, elems: Vec<Elem>, matrices: Vec<CMat>, dim: usize) -> Self {
        let index = elems
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        MatrixRep { group, elems, matrices, dim, index }
    }

    pub fn matrix_of(&self, e: &Elem) -> &CMat {
        &self.matrices[self.index[e]]
    }

    /// Homomorphism and unitarity to the structural tolerance; exhaustive
    /// over pairs for small groups, deterministically sampled above.
    pub fn check(&self) -> Result<()> {
        let n = self.elems.len();
        let id = CMat::identity(self.dim, self.dim);
        for m in &self.matrices {
            if max_abs(&(m * m.adjoint() - &id)) > STRUCTURAL_TOL {
                return Err(Error::Numerical("matrix is not unitary".into()));
            }
        }
        let verify = |a: usize, b: usize| -> Result<()> {
            let prod = self.group.compose(&self.elems[a], &self.elems[b]);
            let expect = self.matrix_of(&prod);
            if max_abs(&(&self.matrices[a] * &self.matrices[b] - expect)) > STRUCTURAL_TOL {
                return Err(Error::Numerical("homomorphism violated".into()));
            }
            Ok(())
        };
        if n <= 60 {
            for a in 0..n {
                for b in 0..n {
                    verify(a, b)?;
                }
            }
        } else {
            let mut state = 0xabcdefu64;
            for _ in 0..10_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                verify((state % n as u64) as usize, ((state >> 32) % n as u64) as usize)?;
            }
        }
        Ok(())
    }
}

/// Permutation matrices of an action: M|omega> = |g . omega>.
pub fn matrices_from_action(action: &GroupAction) -> Result<MatrixRep> {
    let dim = action.domain_size();
    if dim > 64 {
        return Err(Error::CapExceeded(format!("action on {dim} points exceeds the 64-point cap")));
    }
    let group = action.group().clone();
    if group.order() > 2000 {
        return Err(Error::CapExceeded("group order exceeds the 2000-element cap".into()));
    }
    let elems = group.enumerate()?;
    let matrices = elems
        .iter()
        .map(|g| {
            CMat::from_fn(dim as usize, dim as usize, |row, col| {
                if action.apply(g, col as u64) == row as u64 {
                    C64::new(1.0, 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            })
        })
        .collect();
    Ok(MatrixRep::new(group, elems, matrices, dim as usize))
}

/// The projector onto the isotypic component of one irreducible inside a
/// matrix representation: (deg/|G|) * sum over g of conj(chi(g)) rho(g).
pub fn isotypic_projector(table: &CharacterTable, irrep: usize, rep: &MatrixRep) -> Result<CMat> {
    let mut acc = CMat::zeros(rep.dim, rep.dim);
    for (g, m) in rep.elems.iter().zip(&rep.matrices) {
        let value = table.value_at_element(irrep, g)?;
        let (re, im) = value.conj().to_complex();
        acc += m * C64::new(re, im);
    }
    let scale = table.degree(irrep) as f64 / rep.group.order() as f64;
    acc *= C64::new(scale, 0.0);
    if max_abs(&(&acc * &acc - &acc)) > STRUCTURAL_TOL {
        return Err(Error::Numerical(format!(
            "isotypic projector for row {irrep} is not idempotent"
        )));
    }
    Ok(acc)
}

/// An induced representation from a one-dimensional subgroup character,
/// realized on the coset basis: block-monomial matrices, the projector
/// onto the identity-coset line, and the coset bookkeeping for
/// measurement outcomes.
pub struct InducedRep {
    pub rep: MatrixRep,
    /// Transversal elements, identity first.
    pub transversal: Vec<Elem>,
    /// Coset index of every group element.
    pub coset_of: HashMap<Elem, usize>,
    /// Projector onto the identity-coset component.
    pub e_projector: CMat,
}

/// Decompose the parent group into left cosets of the embedded subgroup.
/// The default transversal picks the first member of each coset in
/// enumeration order (so the identity represents the subgroup itself);
/// `reverse` picks the last member instead, for order-insensitivity checks.
pub fn coset_transversal(
    g_group: &Group,
    h_image: &std::collections::HashSet<Elem>,
    reverse: bool,
) -> Result<(Vec<Elem>, HashMap<Elem, usize>)> {
    let elems = g_group.enumerate()?;
    let iter: Vec<&Elem> = if reverse {
        elems.iter().rev().collect()
    } else {
        elems.iter().collect()
    };
    let mut transversal: Vec<Elem> = Vec::new();
    let mut coset_of: HashMap<Elem, usize> = HashMap::new();
    for g in iter {
        if coset_of.contains_key(g) {
            continue;
        }
        let idx = transversal.len();
        for h in h_image {
            coset_of.insert(g_group.compose(g, h), idx);
        }
        transversal.push(g.clone());
    }
    if reverse {
        // keep the subgroup's own coset at index zero either way
        let id_coset = coset_of[&g_group.identity()];
        if id_coset != 0 {
            transversal.swap(0, id_coset);
            for v in coset_of.values_mut() {
                if *v == 0 {
                    *v = id_coset;
                } else if *v == id_coset {
                    *v = 0;
                }
            }
        }
    }
    Ok((transversal, coset_of))
}

/// Build the induced representation of a linear subgroup character on the
/// coset basis: rho(g) e_i = Y(h) e_j where g t_i = t_j h.
pub fn build_induced(
    engine: &CosetEngine,
    y: usize,
    transversal: Vec<Elem>,
    coset_of: HashMap<Elem, usize>,
) -> Result<InducedRep> {
    let h_table = engine.h_table();
    if h_table.degree(y) != 1 {
        return Err(Error::Parameter(
            "induced matrix models are built from one-dimensional subgroup characters".into(),
        ));
    }
    let g_group = engine.g_table().group.clone();
    let fusion = &engine.setup.fusion;
    let dim = transversal.len();
    if dim > 256 {
        return Err(Error::CapExceeded(format!("induced dimension {dim} exceeds 256")));
    }
    // per-element values of Y through the embedding
    let mut y_of_image: HashMap<Elem, C64> = HashMap::new();
    for (h_elem, g_elem) in &fusion.embed {
        let v = h_table.value_at_element(y, h_elem)?;
        let (re, im) = v.to_complex();
        y_of_image.insert(g_elem.clone(), C64::new(re, im));
    }
    let elems = g_group.enumerate()?;
    let mut matrices = Vec::with_capacity(elems.len());
    for g in &elems {
        let mut m = CMat::zeros(dim, dim);
        for (i, t_i) in transversal.iter().enumerate() {
            let gt = g_group.compose(g, t_i);
            let j = coset_of[&gt];
            let h_in_g = g_group.compose(&g_group.inverse(&transversal[j]), &gt);
            let y_val = y_of_image
                .get(&h_in_g)
                .ok_or_else(|| Error::Embedding("transversal decomposition left the subgroup".into()))?;
            m[(j, i)] = *y_val;
        }
        matrices.push(m);
    }
    let mut e_projector = CMat::zeros(dim, dim);
    e_projector[(0, 0)] = C64::new(1.0, 0.0);
    let rep = MatrixRep::new(g_group, elems, matrices, dim);
    let induced = InducedRep { rep, transversal, coset_of, e_projector };
    induced.check_completeness()?;
    Ok(induced)
}

impl InducedRep {
    /// Measurement projector for coset j: t_j E t_j^(-1).
    pub fn coset_projector(&self, j: usize) -> CMat {
        let t = self.rep.matrix_of(&self.transversal[j]);
        t * &self.e_projector * t.adjoint()
    }

    /// The coset projectors must resolve the identity.
    pub fn check_completeness(&self) -> Result<()> {
        let mut acc = CMat::zeros(self.rep.dim, self.rep.dim);
        for j in 0..self.transversal.len() {
            acc += self.coset_projector(j);
        }
        let id = CMat::identity(self.rep.dim, self.rep.dim);
        if max_abs(&(acc - id)) > STRUCTURAL_TOL {
            return Err(Error::Numerical("coset projectors do not sum to the identity".into()));
        }
        Ok(())
    }

    /// Character of the representation at an element (trace).
    pub fn trace_at(&self, e: &Elem) -> C64 {
        self.rep.matrix_of(e).trace()
    }
}

/// The optimal input state and its claimed success value.
pub struct Protocol {
    pub psi: CVec,
    /// Exact value dim V' / dim induced, the claimed success probability.
    pub lambda: f64,
    pub shared_projector: CMat,
}

/// Build the optimal state: the dominant eigenvector of P E P where P
/// projects onto the isotypic components shared with the t-th power of
/// the problem representation.
pub fn optimal_protocol(
    g_table: &Arc<CharacterTable>,
    engine: &mut CosetEngine,
    y: usize,
    induced: &InducedRep,
    power_set: &IrrepSet,
) -> Result<Protocol> {
    let induced_set = engine.induced_support(y)?;
    let mut shared = IrrepSet::empty(power_set.len());
    for i in induced_set.iter() {
        if power_set.contains(i) {
            shared.insert(i);
        }
    }
    if shared.is_empty() {
        return Err(Error::Numerical(
            "no shared isotypic component; the protocol degenerates".into(),
        ));
    }
    let mut dim_vp = 0u64;
    let mut projector = CMat::zeros(induced.rep.dim, induced.rep.dim);
    for i in shared.iter() {
        dim_vp += engine.restriction_multiplicities(i)?[y] * g_table.degree(i);
        projector += isotypic_projector(g_table, i, &induced.rep)?;
    }
    let lambda = dim_vp as f64 / induced.rep.dim as f64;
    let m = &projector * &induced.e_projector * &projector;
    // spectrum check: the only nonzero eigenvalue is lambda
    if max_abs(&(&m * &m - &m * C64::new(lambda, 0.0))) > COMPARISON_TOL {
        return Err(Error::Numerical(
            "shared-component compression is not a scaled projector".into(),
        ));
    }
    // one application of m maps any non-orthogonal vector into the
    // eigenspace; try coordinate vectors until one survives
    let mut psi = None;
    for k in 0..induced.rep.dim {
        let mut probe = CVec::zeros(induced.rep.dim);
        probe[k] = C64::new(1.0, 0.0);
        let image = &m * probe;
        let norm = image.norm();
        if norm > 1e-6 {
            psi = Some(image / C64::new(norm, 0.0));
            break;
        }
    }
    let psi = psi.ok_or_else(|| {
        Error::Numerical("shared-component compression is numerically rank deficient".into())
    })?;
    Ok(Protocol { psi, lambda, shared_projector: projector })
}

/// Average success probability of the protocol over every hidden element:
/// prepare psi, apply the hidden unitary, measure the coset projectors,
/// count the runs that name the hidden element's coset.
pub fn simulate_success(protocol: &Protocol, induced: &InducedRep) -> f64 {
    let mut total = 0.0;
    let order = induced.rep.elems.len() as f64;
    let projectors: Vec<CMat> = (0..induced.transversal.len())
        .map(|j| induced.coset_projector(j))
        .collect();
    for (a, rho) in induced.rep.elems.iter().zip(&induced.rep.matrices) {
        let state = rho * &protocol.psi;
        let target = induced.coset_of[a];
        let amplitude = state.dotc(&(&projectors[target] * &state));
        total += amplitude.re;
    }
    total / order
}

/// One verified instance: the exact formula value against the simulation.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub name: String,
    pub formula: String,
    pub formula_value: f64,
    pub simulated: f64,
    pub delta: f64,
    pub pass: bool,
}

/// Run one problem through both sides: the exact engine and the explicit
/// protocol simulation at `t` queries.
pub fn verify_instance(name: &str, spec: &ProblemSpec, t: u64) -> Result<VerifyOutcome> {
    verify_instance_with(name, spec, t, false)
}

/// Same, with a reversed transversal to exercise order insensitivity.
pub fn verify_instance_with(
    name: &str,
    spec: &ProblemSpec,
    t: u64,
    reverse_transversal: bool,
) -> Result<VerifyOutcome> {
    // normalize identification problems to trivial-subgroup coset problems
    let coset_spec = match &spec.mode {
        Mode::Sod => ProblemSpec {
            mode: Mode::Coset { subgroup: SubgroupChoice::Trivial },
            ..spec.clone()
        },
        Mode::Coset { .. } => spec.clone(),
    };
    let mut realized = engine::realize(&coset_spec)?;
    let eng = realized
        .coset
        .as_mut()
        .expect("coset mode realizes an engine");
    let set = power_support(&realized.v, t)?;
    let (p_exact, argmax) = eng.success(&set)?;
    let y = argmax
        .iter()
        .copied()
        .find(|&y| eng.h_table().degree(y) == 1)
        .ok_or_else(|| {
            Error::Parameter(format!(
                "instance '{name}': no one-dimensional maximizer to build a matrix model from"
            ))
        })?;
    let h_image: std::collections::HashSet<Elem> =
        eng.setup.fusion.embed.values().cloned().collect();
    let g_group = realized.g_table.group.clone();
    let (transversal, coset_of) = coset_transversal(&g_group, &h_image, reverse_transversal)?;
    let induced = build_induced(eng, y, transversal, coset_of)?;
    induced.rep.check()?;
    let protocol = optimal_protocol(&realized.g_table, eng, y, &induced, &set)?;
    let simulated = simulate_success(&protocol, &induced);
    let formula_value = p_exact.to_f64().expect("probability fits f64");
    let delta = (simulated - formula_value).abs();
    Ok(VerifyOutcome {
        name: name.to_string(),
        formula: format_rational(&p_exact),
        formula_value,
        simulated,
        delta,
        pass: delta <= COMPARISON_TOL,
    })
}

/// The standard verification battery: every worked example small enough
/// for dense matrices, both coset and identification modes.
pub fn standard_instances() -> Vec<(String, ProblemSpec, u64)> {
    use crate::group::GroupSpec;
    let mut out: Vec<(String, ProblemSpec, u64)> = Vec::new();
    for t in 1..=2u64 {
        out.push((
            format!("klein4-in-s4/t={t}"),
            ProblemSpec::coset(GroupSpec::Symmetric { n: 4 }, SubgroupChoice::Klein4),
            t,
        ));
    }
    for (p, n) in [(2u64, 1u32), (3, 1)] {
        out.push((
            format!("heisenberg-{p}-{n}-center/t=1"),
            ProblemSpec::coset(GroupSpec::Heisenberg { p, n }, SubgroupChoice::Center),
            1,
        ));
        for t in 1..=2u64 {
            out.push((
                format!("heisenberg-{p}-{n}-identify/t={t}"),
                ProblemSpec::sod(GroupSpec::Heisenberg { p, n }),
                t,
            ));
        }
    }
    for n in 3..=4u32 {
        for t in 1..=3u64 {
            out.push((
                format!("symmetric-{n}-identify/t={t}"),
                ProblemSpec::sod(GroupSpec::Symmetric { n }),
                t,
            ));
        }
    }
    out.push((
        "cyclic-3-regular-identify/t=1".into(),
        {
            let mut s = ProblemSpec::sod(GroupSpec::AbelianProduct { orders: vec![3] });
            s.rep = RepSource::Regular;
            s
        },
        1,
    ));
    // the sign of a permutation on three points, with the rotation
    // subgroup given explicitly
    out.push((
        "sign-of-s3/t=1".into(),
        ProblemSpec {
            group: GroupSpec::Symmetric { n: 3 },
            rep: RepSource::Natural,
            mode: Mode::Coset {
                subgroup: SubgroupChoice::Explicit {
                    group: GroupSpec::AbelianProduct { orders: vec![3] },
                    embedding: vec![
                        engine::EmbedPair { h: vec![0], g: vec![0, 1, 2] },
                        engine::EmbedPair { h: vec![1], g: vec![1, 2, 0] },
                        engine::EmbedPair { h: vec![2], g: vec![2, 0, 1] },
                    ],
                },
            },
            threshold: "2/3".into(),
        },
        1,
    ));
    out
}

/// Run the whole battery.
pub fn verify_all() -> Result<Vec<VerifyOutcome>> {
    standard_instances()
        .into_iter()
        .map(|(name, spec, t)| verify_instance(&name, &spec, t))
        .collect()
}
