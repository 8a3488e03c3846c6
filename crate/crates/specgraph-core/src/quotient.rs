//! Quotients `M/N` in invariant factor form, with the projection map.
//!
//! Writing `M = Z^k / diag(d) Z^k`, a submodule `N` lifts to the column
//! span of `B = [diag(d) | lifted generators]`. A Smith normal form
//! `U B V = diag(s)` then gives `M/N = (+) Z/s_i`, and because only row
//! operations affect the projection we track `U` alone: an element `x`
//! maps to `(U x) mod s`, with the `s_i = 1` coordinates dropped.

use alloc::vec::Vec;

use crate::module::FinModule;
use crate::submodule::Submodule;

#[derive(Debug, Clone)]
pub struct QuotientMap {
    source: FinModule,
    target: FinModule,
    /// Row `j` holds the coefficients of the `j`-th target coordinate as a
    /// linear form in the source coordinates, already reduced mod `s_j`.
    forms: Vec<Vec<u64>>,
}

impl QuotientMap {
    pub fn new(source: &FinModule, n: &Submodule) -> Self {
        let k = source.rank();
        let d = source.invariant_factors();
        let gens = n.generators(source);
        let mut mat: Vec<Vec<i128>> = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = alloc::vec![0i128; k + gens.len()];
            row[i] = d[i] as i128;
            for (t, &g) in gens.iter().enumerate() {
                row[k + t] = source.decode(g)[i] as i128;
            }
            mat.push(row);
        }
        let mut u: Vec<Vec<i128>> = (0..k)
            .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
            .collect();
        smith_rows(&mut mat, &mut u);
        // Full row rank is guaranteed by the diag(d) block, so every
        // diagonal entry is positive.
        let mut factors = Vec::new();
        let mut forms = Vec::new();
        for j in 0..k {
            let s = mat[j][j].unsigned_abs() as u64;
            debug_assert!(s >= 1);
            if s == 1 {
                continue;
            }
            factors.push(s);
            let form = u[j]
                .iter()
                .map(|&c| (c.rem_euclid(s as i128)) as u64)
                .collect();
            forms.push(form);
        }
        let target = FinModule::new(source.ring(), &factors)
            .expect("smith normal form yields a valid divisor chain");
        QuotientMap { source: source.clone(), target, forms }
    }

    pub fn source(&self) -> &FinModule {
        &self.source
    }

    pub fn target(&self) -> &FinModule {
        &self.target
    }

    pub fn project(&self, x: u32) -> u32 {
        let a = self.source.decode(x);
        let t = self.target.invariant_factors();
        let coords: Vec<u64> = self
            .forms
            .iter()
            .zip(t.iter())
            .map(|(form, &s)| {
                form.iter()
                    .zip(a.iter())
                    .fold(0u64, |acc, (&c, &v)| (acc + c * (v % s)) % s)
            })
            .collect();
        self.target.encode(&coords)
    }

    /// Image of a submodule; for `L >= N` this is `L/N`.
    pub fn project_submodule(&self, l: &Submodule) -> Submodule {
        let mut elements: Vec<u32> = l.elements().iter().map(|&x| self.project(x)).collect();
        elements.sort_unstable();
        elements.dedup();
        Submodule::from_sorted_elements(elements)
    }

    /// Preimage of a submodule of the target; always contains `N`.
    pub fn preimage(&self, sbar: &Submodule) -> Submodule {
        let elements = (0..self.source.order() as u32)
            .filter(|&x| sbar.contains(self.project(x)))
            .collect();
        Submodule::from_sorted_elements(elements)
    }
}

/// Diagonalize `mat` with the divisibility chain on the diagonal, applying
/// every row operation to `u` as well. Column operations are untracked.
fn smith_rows(mat: &mut [Vec<i128>], u: &mut [Vec<i128>]) {
    let rows = mat.len();
    if rows == 0 {
        return;
    }
    let cols = mat[0].len();
    loop {
        let mut p = 0;
        while p < rows && p < cols {
            let Some((bi, bj)) = pivot(mat, p, rows, cols) else { break };
            mat.swap(p, bi);
            u.swap(p, bi);
            for row in mat.iter_mut() {
                row.swap(p, bj);
            }
            let mut clean = true;
            for i in p + 1..rows {
                let q = mat[i][p].div_euclid(mat[p][p]);
                if q != 0 {
                    let (head, tail) = mat.split_at_mut(i);
                    for (x, &y) in tail[0].iter_mut().zip(&head[p]) {
                        *x -= q * y;
                    }
                    let (head, tail) = u.split_at_mut(i);
                    for (x, &y) in tail[0].iter_mut().zip(&head[p]) {
                        *x -= q * y;
                    }
                }
                if mat[i][p] != 0 {
                    clean = false;
                }
            }
            for j in p + 1..cols {
                let q = mat[p][j].div_euclid(mat[p][p]);
                if q != 0 {
                    for row in mat.iter_mut() {
                        let v = q * row[p];
                        row[j] -= v;
                    }
                }
                if mat[p][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                p += 1;
            }
        }
        // Normalize signs, then enforce the divisibility chain; a repair
        // reintroduces off-diagonal entries, so reduce again.
        for i in 0..rows.min(cols) {
            if mat[i][i] < 0 {
                for v in mat[i].iter_mut() {
                    *v = -*v;
                }
                for v in u[i].iter_mut() {
                    *v = -*v;
                }
            }
        }
        let mut repaired = false;
        for i in 0..rows.min(cols).saturating_sub(1) {
            let (a, b) = (mat[i][i], mat[i + 1][i + 1]);
            if a != 0 && b % a != 0 {
                for row in mat.iter_mut() {
                    let v = row[i + 1];
                    row[i] += v;
                }
                repaired = true;
                break;
            }
        }
        if !repaired {
            return;
        }
    }
}

fn pivot(mat: &[Vec<i128>], p: usize, rows: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in p..rows {
        for j in p..cols {
            if mat[i][j] != 0
                && best.is_none_or(|(bi, bj)| mat[i][j].abs() < mat[bi][bj].abs())
            {
                best = Some((i, j));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Lattice, DEFAULT_MAX_ORDER};
    use crate::num;
    use crate::ring::Ring;

    fn module(factors: &[u64]) -> FinModule {
        FinModule::new(Ring::integers(), factors).unwrap()
    }

    #[test]
    fn z12_mod_6m_is_z6() {
        let m = module(&[12]);
        let n = Submodule::scale(&m, 6, &Submodule::full(&m));
        let q = QuotientMap::new(&m, &n);
        assert_eq!(q.target().invariant_factors(), &[6]);
        assert_eq!(q.project(0), 0);
        // 7 = 6 + 1 maps to the same class as 1.
        assert_eq!(q.project(7), q.project(1));
        assert_ne!(q.project(1), q.project(2));
    }

    #[test]
    fn quotient_by_full_and_zero() {
        let m = module(&[2, 6]);
        let full = Submodule::full(&m);
        let q = QuotientMap::new(&m, &full);
        assert!(q.target().is_zero());
        let z = QuotientMap::new(&m, &Submodule::zero());
        assert_eq!(z.target().invariant_factors(), &[2, 6]);
        assert_eq!(z.target().order(), 12);
    }

    #[test]
    fn kernel_is_exactly_n() {
        let m = module(&[2, 4]);
        let lat = Lattice::enumerate(&m, DEFAULT_MAX_ORDER).unwrap();
        for s in lat.all() {
            let q = QuotientMap::new(&m, s);
            let kernel: Vec<u32> =
                (0..m.order() as u32).filter(|&x| q.project(x) == 0).collect();
            assert_eq!(kernel, s.elements());
            assert_eq!(q.target().order() * s.order(), m.order());
        }
    }

    #[test]
    fn projection_is_additive_and_surjective() {
        let m = module(&[2, 6]);
        let lat = Lattice::enumerate(&m, DEFAULT_MAX_ORDER).unwrap();
        for s in lat.all() {
            let q = QuotientMap::new(&m, s);
            for x in 0..m.order() as u32 {
                for y in 0..m.order() as u32 {
                    assert_eq!(q.project(m.add(x, y)), q.target().add(q.project(x), q.project(y)));
                }
            }
            let image = q.project_submodule(&Submodule::full(&m));
            assert!(image.is_full(q.target()));
        }
    }

    /// The number of solutions of `e * x = 0` determines a finite abelian
    /// group, so matching those counts against the coset computation
    /// pins down the invariant factors independently of the matrix math.
    #[test]
    fn order_profile_matches_cosets() {
        for factors in [&[8u64][..], &[2, 4], &[12], &[2, 2, 2], &[3, 9], &[2, 6]] {
            let m = module(factors);
            let lat = Lattice::enumerate(&m, DEFAULT_MAX_ORDER).unwrap();
            for s in lat.all() {
                let q = QuotientMap::new(&m, s);
                for e in num::divisors(m.exponent()) {
                    let from_cosets = (0..m.order() as u32)
                        .filter(|&x| s.contains(m.smul(e, x)))
                        .count() as u64
                        / s.order();
                    let from_factors: u64 = q
                        .target()
                        .invariant_factors()
                        .iter()
                        .map(|&t| num::gcd(t, e))
                        .product();
                    assert_eq!(from_cosets, from_factors, "factors {factors:?} e {e}");
                }
            }
        }
    }

    #[test]
    fn images_preserve_lattice_structure() {
        let m = module(&[2, 6]);
        let lat = Lattice::enumerate(&m, DEFAULT_MAX_ORDER).unwrap();
        let n = Submodule::scale(&m, 3, &Submodule::full(&m));
        let q = QuotientMap::new(&m, &n);
        for a in lat.all().iter().filter(|a| n.is_subset_of(a)) {
            for b in lat.all().iter().filter(|b| n.is_subset_of(b)) {
                let sum = Submodule::sum(&m, a, b);
                let meet = Submodule::intersect(a, b);
                let qa = q.project_submodule(a);
                let qb = q.project_submodule(b);
                assert_eq!(
                    q.project_submodule(&sum),
                    Submodule::sum(q.target(), &qa, &qb)
                );
                assert_eq!(
                    q.project_submodule(&meet),
                    Submodule::intersect(&qa, &qb)
                );
                // Colon divisors transfer: exponent of (M/N)/(A/N) equals
                // exponent of M/A.
                assert_eq!(
                    Submodule::colon_divisor(q.target(), &qa),
                    Submodule::colon_divisor(&m, a)
                );
            }
        }
    }

    #[test]
    fn preimage_round_trip() {
        let m = module(&[2, 4]);
        let n = Submodule::scale(&m, 2, &Submodule::full(&m));
        let q = QuotientMap::new(&m, &n);
        let tlat = Lattice::enumerate(q.target(), DEFAULT_MAX_ORDER).unwrap();
        for sbar in tlat.all() {
            let pre = q.preimage(sbar);
            assert!(n.is_subset_of(&pre));
            assert_eq!(&q.project_submodule(&pre), sbar);
        }
    }
}
