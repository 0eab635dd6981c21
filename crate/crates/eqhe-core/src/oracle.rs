//! Brute-force numeric verification path.
//!
//! Everything here works from the explicit 4x4 Hamiltonian matrix: numeric
//! diagonalization, Gibbs density matrices assembled from numeric eigenpairs,
//! Wootters concurrence computed from the density matrix via the spin-flip
//! construction, and cycle quantities obtained by direct summation over
//! occupations. None of the closed forms from [`crate::spin`],
//! [`crate::otto`], or [`crate::concurrence_view`] are reused, so agreement
//! between the two paths is a real check.
//!
//! Matrices use the product basis in the order `|00>, |11>, |01>, |10>`,
//! which lines matrix indices up with the fixed eigenstate order of
//! [`Spectrum`]. The Hamiltonian splits over this basis into two scalar
//! blocks (the polarized states) and one 2x2 block on the `|01>, |10>`
//! subspace.

// fixed 4x4 matrix math reads best with plain index loops
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::math;
use crate::otto::{CycleResult, CycleSpec};
use crate::spin::{positive_temperature, ModelParams, Spectrum};
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

type Matrix4 = [[Complex64; 4]; 4];

/// Density-matrix validation slack: hermiticity and trace within this of
/// exact, eigenvalues no more negative than this.
const DENSITY_TOLERANCE: f64 = 1e-12;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The Hamiltonian `J[(1+iD) s1+ s2- + (1-iD) s1- s2+]` as an explicit
/// matrix: `s1+ s2-` maps `|01>` to `|10>`, so the only nonzero entries sit
/// on the `|01>, |10>` block.
pub fn hamiltonian(params: &ModelParams) -> Matrix4 {
    let j = params.j();
    let d = params.d();
    let mut h = [[ZERO; 4]; 4];
    h[3][2] = c(j, j * d); // <10| H |01> = J(1+iD)
    h[2][3] = c(j, -j * d); // <01| H |10> = J(1-iD)
    h
}

/// Numeric eigenpairs in the fixed eigenstate order, plus the eigenvector
/// phase recovered from the amplitude ratio.
struct EigenSystem {
    energies: [f64; 4],
    /// `vectors[k]` is the k-th eigenvector in basis coordinates.
    vectors: [[Complex64; 4]; 4],
    theta: f64,
}

/// Solve the 2x2 Hermitian block `[[alpha, beta], [conj(beta), gamma]]` of
/// the Hamiltonian with the stable discriminant form, then order the pair by
/// eigenstate identity: the state whose `|10>`-to-`|01>` amplitude ratio has
/// positive real part is the `e^{i theta}`-phased one (index 2), because
/// `theta` lies in `(-pi/2, pi/2)`.
fn eigensystem(params: &ModelParams) -> EigenSystem {
    let h = hamiltonian(params);
    let alpha = h[2][2].re;
    let gamma = h[3][3].re;
    let beta = h[2][3];
    let mag = math::sqrt(beta.norm_sqr());

    let mut vectors = [[ZERO; 4]; 4];
    vectors[0][0] = ONE;
    vectors[1][1] = ONE;

    if mag == 0.0 {
        // decoupled limit: the block is already diagonal and the phase is
        // unconstrained; fall back to the bare product states
        vectors[2][2] = ONE;
        vectors[3][3] = ONE;
        return EigenSystem {
            energies: [0.0, 0.0, alpha, gamma],
            vectors,
            theta: 0.0,
        };
    }

    let mean = 0.5 * (alpha + gamma);
    let disc = math::hypot(0.5 * (alpha - gamma), mag);
    let lam_plus = mean + disc;
    let lam_minus = mean - disc;

    // amplitude ratio (lam - alpha)/beta has Re > 0 exactly for the
    // e^{i theta} eigenvector
    let (e3, e4) = if (lam_plus - alpha) * beta.conj().re > 0.0 {
        (lam_plus, lam_minus)
    } else {
        (lam_minus, lam_plus)
    };

    for (slot, lam) in [(2usize, e3), (3usize, e4)] {
        // v = (beta, lam - alpha), rephased so the |01> component is real
        // positive, then normalized
        let tail = (lam - alpha) * beta.conj() / mag;
        let norm = math::hypot(mag, math::sqrt(tail.norm_sqr()));
        vectors[slot][2] = c(mag / norm, 0.0);
        vectors[slot][3] = tail / norm;
    }

    let ratio = (e3 - alpha) * beta.conj();
    let theta = math::atan2(ratio.im, ratio.re);
    EigenSystem {
        energies: [0.0, 0.0, e3, e4],
        vectors,
        theta,
    }
}

/// Numerically computed spectrum; matches [`crate::spin::spectrum`] after the
/// eigenstate-identity ordering above.
pub fn diagonalize(params: &ModelParams) -> Spectrum {
    let es = eigensystem(params);
    Spectrum {
        energies: es.energies,
        theta: es.theta,
    }
}

/// Boltzmann occupations over arbitrary numeric energies, rescaled by the
/// largest weight so nothing overflows.
fn boltzmann(energies: &[f64; 4], temperature: f64) -> [f64; 4] {
    let beta = 1.0 / temperature;
    let mut g = [0.0; 4];
    let mut m = f64::NEG_INFINITY;
    for i in 0..4 {
        g[i] = -beta * energies[i];
        if g[i] > m {
            m = g[i];
        }
    }
    let w = [
        math::exp(g[0] - m),
        math::exp(g[1] - m),
        math::exp(g[2] - m),
        math::exp(g[3] - m),
    ];
    let sum = w[0] + w[1] + w[2] + w[3];
    [w[0] / sum, w[1] / sum, w[2] / sum, w[3] / sum]
}

/// A validated two-qubit density matrix in the `|00>, |11>, |01>, |10>`
/// basis order.
///
/// Construction checks hermiticity and unit trace within 1e-12 and that no
/// eigenvalue is below -1e-12; the stored matrix is the Hermitian average of
/// the input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4 {
    entries: Matrix4,
}

impl DensityMatrix4 {
    // comparisons negated so NaN entries land on the error path
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn new(entries: Matrix4) -> Result<Self> {
        let mut dev: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let asym = entries[i][j] - entries[j][i].conj();
                dev = dev.max(math::sqrt(asym.norm_sqr()));
            }
        }
        if !(dev <= DENSITY_TOLERANCE) {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let mut h = [[ZERO; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                h[i][j] = (entries[i][j] + entries[j][i].conj()) * c(0.5, 0.0);
            }
        }
        let trace = h[0][0].re + h[1][1].re + h[2][2].re + h[3][3].re;
        if !(math::abs(trace - 1.0) <= DENSITY_TOLERANCE) {
            return Err(Error::NotUnitTrace { trace });
        }
        let (eigs, _) = jacobi_hermitian(h, false);
        for lam in eigs {
            if !(lam >= -DENSITY_TOLERANCE) {
                return Err(Error::NotPositiveSemidefinite { eigenvalue: lam });
            }
        }
        Ok(Self { entries: h })
    }

    /// Projector onto a pure state (normalized here).
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn from_pure(state: &[Complex64; 4]) -> Result<Self> {
        let norm_sqr: f64 = state.iter().map(|a| a.norm_sqr()).sum();
        if !(norm_sqr > 0.0) || !norm_sqr.is_finite() {
            return Err(Error::NonFinite {
                name: "state norm",
                value: norm_sqr,
            });
        }
        let mut entries = [[ZERO; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                entries[i][j] = state[i] * state[j].conj() / norm_sqr;
            }
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &Matrix4 {
        &self.entries
    }
}

/// Thermal density matrix `exp(-H/T)/Z` assembled as the occupation-weighted
/// sum of numeric eigenprojectors.
pub fn gibbs_density(params: &ModelParams, temperature: f64) -> Result<DensityMatrix4> {
    let temperature = positive_temperature(temperature)?;
    let es = eigensystem(params);
    let p = boltzmann(&es.energies, temperature);
    let mut rho = [[ZERO; 4]; 4];
    for (k, vec) in es.vectors.iter().enumerate() {
        for i in 0..4 {
            for j in 0..4 {
                rho[i][j] += p[k] * vec[i] * vec[j].conj();
            }
        }
    }
    DensityMatrix4::new(rho)
}

/// Wootters concurrence from the density matrix.
///
/// With the spin-flipped matrix `rho~ = (sy (x) sy) conj(rho) (sy (x) sy)`,
/// the construction needs the decreasingly sorted square roots `l_i` of the
/// eigenvalues of `rho * rho~`; the result is `max(0, l1 - l2 - l3 - l4)`.
/// The `l_i` are computed as the singular values of
/// `G = sqrt(rho~) * sqrt(rho)` (since `G+ G = sqrt(rho) rho~ sqrt(rho)`),
/// which keeps the small ones at full absolute precision where squaring
/// through `rho * rho~` would cost half the digits.
pub fn wootters_concurrence(rho: &DensityMatrix4) -> f64 {
    let (mu, v) = jacobi_hermitian(rho.entries, true);
    // sqrt(rho) = V diag(sqrt(mu)) V+, clamping the tiny negatives that the
    // validation tolerance lets through
    let root = mu.map(|m| math::sqrt(m.max(0.0)));
    let mut sqrt_rho = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = ZERO;
            for (k, rk) in root.iter().enumerate() {
                s += v[i][k] * *rk * v[j][k].conj();
            }
            sqrt_rho[i][j] = s;
        }
    }

    // sqrt(rho~) = F conj(sqrt(rho)) F, because rho~ = F conj(rho) F and F
    // is a real symmetric involution
    let sqrt_flipped = spin_flipped(&sqrt_rho);
    let g = matmul(&sqrt_flipped, &sqrt_rho);
    let mut lam = singular_values(g);
    lam.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
    (lam[0] - lam[1] - lam[2] - lam[3]).clamp(0.0, 1.0)
}

/// One cycle by direct summation: numeric eigenpairs give the occupations at
/// each bath contact, and the heats come straight from
/// `sum_i E_i (p_after - p_before)`.
pub fn simulate_cycle(spec: &CycleSpec) -> CycleResult {
    let hot = eigensystem(&spec.hot());
    let cold = eigensystem(&spec.cold());
    let p_hot = boltzmann(&hot.energies, spec.hot_temperature());
    let p_cold = boltzmann(&cold.energies, spec.cold_temperature());
    let mut q_h = 0.0;
    let mut q_l = 0.0;
    for i in 0..4 {
        q_h += hot.energies[i] * (p_hot[i] - p_cold[i]);
        q_l += cold.energies[i] * (p_cold[i] - p_hot[i]);
    }
    CycleResult::from_heats(
        q_h,
        q_l,
        hot.energies[2],
        cold.energies[2],
        spec.hot_temperature(),
        spec.cold_temperature(),
    )
}

/// `(sy (x) sy) conj(rho) (sy (x) sy)` in this basis order: the flip matrix
/// swaps `|00> <-> |11>` with sign -1 and `|01> <-> |10>` with sign +1.
fn spin_flipped(rho: &Matrix4) -> Matrix4 {
    const SWAP: [usize; 4] = [1, 0, 3, 2];
    const SIGN: [f64; 4] = [-1.0, -1.0, 1.0, 1.0];
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = SIGN[i] * SIGN[j] * rho[SWAP[i]][SWAP[j]].conj();
        }
    }
    out
}

fn matmul(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            if aik == ZERO {
                continue;
            }
            for j in 0..4 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Singular values by one-sided Jacobi: rotate column pairs until they are
/// mutually orthogonal, then read off the column norms. Shares the rotation
/// algebra with [`jacobi_hermitian`], applied to the implicit 2x2 Gram
/// matrix of each column pair.
fn singular_values(mut g: Matrix4) -> [f64; 4] {
    for _sweep in 0..32 {
        let mut rotated = false;
        for p in 0..3 {
            for q in (p + 1)..4 {
                let mut gram_pp = 0.0;
                let mut gram_qq = 0.0;
                let mut gram_pq = ZERO;
                for row in &g {
                    gram_pp += row[p].norm_sqr();
                    gram_qq += row[q].norm_sqr();
                    gram_pq += row[p].conj() * row[q];
                }
                let mag = math::sqrt(gram_pq.norm_sqr());
                // relative orthogonality test keeps small singular values
                // accurate without endless no-op rotations
                if gram_pp == 0.0 || gram_qq == 0.0 {
                    continue;
                }
                if mag <= 1e-15 * math::sqrt(gram_pp * gram_qq) {
                    continue;
                }
                rotated = true;
                let phase = gram_pq / mag;
                let tau = (gram_qq - gram_pp) / (2.0 * mag);
                let t = {
                    let root = math::hypot(tau, 1.0);
                    if tau >= 0.0 {
                        -1.0 / (tau + root)
                    } else {
                        1.0 / (-tau + root)
                    }
                };
                let cos = 1.0 / math::hypot(t, 1.0);
                let sin = t * cos;
                for row in &mut g {
                    let gp = row[p];
                    let gq = row[q];
                    row[p] = cos * gp + sin * phase.conj() * gq;
                    row[q] = -sin * phase * gp + cos * gq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sigma = [0.0; 4];
    for (k, s) in sigma.iter_mut().enumerate() {
        let mut norm_sqr = 0.0;
        for row in &g {
            norm_sqr += row[k].norm_sqr();
        }
        *s = math::sqrt(norm_sqr);
    }
    sigma
}

/// Cyclic Jacobi eigensolver for Hermitian 4x4 matrices. Returns the
/// eigenvalues (unsorted) and, when requested, the matching eigenvectors as
/// columns of the second result.
///
/// Each rotation first strips the phase of the pivot entry, then applies the
/// textbook symmetric rotation with the smaller-angle root; the pivot is
/// zeroed explicitly, so off-diagonal mass decreases monotonically and the
/// sweep count stays small.
fn jacobi_hermitian(mut a: Matrix4, want_vectors: bool) -> ([f64; 4], Matrix4) {
    let mut v = [[ZERO; 4]; 4];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = ONE;
    }

    let scale: f64 = {
        let mut s = 0.0;
        for row in &a {
            for e in row {
                s += e.norm_sqr();
            }
        }
        s.max(f64::MIN_POSITIVE)
    };

    for _sweep in 0..32 {
        let mut off = 0.0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                off += a[i][j].norm_sqr();
            }
        }
        if off <= scale * 1e-32 {
            break;
        }

        for p in 0..3 {
            for q in (p + 1)..4 {
                let beta = a[p][q];
                let mag = math::sqrt(beta.norm_sqr());
                if mag == 0.0 {
                    continue;
                }
                let phase = beta / mag;
                let tau = (a[q][q].re - a[p][p].re) / (2.0 * mag);
                let t = {
                    let root = math::hypot(tau, 1.0);
                    if tau >= 0.0 {
                        -1.0 / (tau + root)
                    } else {
                        1.0 / (-tau + root)
                    }
                };
                let cos = 1.0 / math::hypot(t, 1.0);
                let sin = t * cos;
                // unitary restricted to (p, q): [[cos, -sin*phase], [sin*conj(phase), cos]]
                let s_pq = sin * phase;

                // right-multiply columns p and q
                for i in 0..4 {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = cos * aip + sin * phase.conj() * aiq;
                    a[i][q] = -s_pq * aip + cos * aiq;
                }
                // left-multiply rows p and q by the conjugate transpose
                for j in 0..4 {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = cos * apj + s_pq * aqj;
                    a[q][j] = -sin * phase.conj() * apj + cos * aqj;
                }
                // exact zero by construction
                a[p][q] = ZERO;
                a[q][p] = ZERO;
                a[p][p] = c(a[p][p].re, 0.0);
                a[q][q] = c(a[q][q].re, 0.0);

                if want_vectors {
                    for i in 0..4 {
                        let vip = v[i][p];
                        let viq = v[i][q];
                        v[i][p] = cos * vip + sin * phase.conj() * viq;
                        v[i][q] = -s_pq * vip + cos * viq;
                    }
                }
            }
        }
    }

    ([a[0][0].re, a[1][1].re, a[2][2].re, a[3][3].re], v)
}
