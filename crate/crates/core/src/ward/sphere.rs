use std::collections::{HashMap, HashSet};

use super::diffsum::DiffSum;
use crate::algebra::{binomial, int, CPoly, PointRational, Rational};
use crate::error::{domain, Result};
use crate::virasoro::{word_weight, ModeWord, Normalizer, PBWVector};

/// A state of the vacuum module placed at a named point.
#[derive(Clone, Debug, PartialEq)]
pub struct Insertion {
    pub state: PBWVector,
    pub label: String,
}

impl Insertion {
    pub fn new(state: PBWVector, label: impl Into<String>) -> Self {
        Insertion { state, label: label.into() }
    }
}

/// Vacuum correlators on the sphere by contour deformation:
///
/// `⟨(L_{-k} v)(w_0) Π u_i(w_i)⟩ = -Σ_i Σ_{p>=0} C(1-k, p) (w_i - w_0)^{1-k-p} ⟨v(w_0) .. (L_{p-1} u_i)(w_i) ..⟩`
///
/// where `L_{-1}` acts as `∂_{w_i}` and `L_0` as the weight. Memoized on
/// the tuple of canonical words; one engine per task.
#[derive(Default)]
pub struct SphereEngine {
    nz: Normalizer,
    memo: HashMap<Vec<ModeWord>, DiffSum>,
}

impl SphereEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// The correlator as a function of the insertion points, variable `i`
    /// being the point of insertion `i`.
    pub fn correlator(&mut self, insertions: &[Insertion]) -> Result<PointRational> {
        let mut seen = HashSet::new();
        for ins in insertions {
            if !seen.insert(ins.label.as_str()) {
                return domain(format!("coincident insertion points at '{}'", ins.label));
            }
        }
        let n = insertions.len();
        let mut total = DiffSum::zero(n);
        // expand every state into canonical words
        let mut combos: Vec<(Vec<ModeWord>, CPoly)> = vec![(Vec::new(), CPoly::one())];
        for ins in insertions {
            let mut next = Vec::new();
            for (ws, c) in &combos {
                for (w, a) in ins.state.terms() {
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, c * a));
                }
            }
            combos = next;
        }
        for (ws, c) in combos {
            let v = self.words(&ws).scale(&c);
            total.add_assign(&v);
        }
        Ok(total.to_point_rational())
    }

    fn words(&mut self, words: &[ModeWord]) -> DiffSum {
        let nv = words.len();
        let Some(i0) = words.iter().position(|w| !w.is_empty()) else {
            return DiffSum::one(nv);
        };
        if let Some(v) = self.memo.get(words) {
            return v.clone();
        }
        let k = -(words[i0][0] as i64);
        let mut base = words.to_vec();
        base[i0] = words[i0][1..].to_vec();
        let mut total = DiffSum::zero(nv);
        for j in 0..nv {
            if j == i0 || words[j].is_empty() {
                continue;
            }
            let wt = word_weight(&words[j]);
            for p in 0..=(wt + 1) {
                let coeff = -binomial(1 - k, p as u32);
                if coeff == Rational::from_integer(0.into()) {
                    continue;
                }
                let inner = match p {
                    0 => self.words(&base).derivative(j),
                    1 => self.words(&base).scale(&CPoly::constant(int(wt))),
                    _ => {
                        let u = PBWVector::monomial(words[j].clone(), CPoly::one());
                        let image = self.nz.apply((p - 1) as i32, &u);
                        let mut acc = DiffSum::zero(nv);
                        for (w2, c2) in image.terms() {
                            let mut ws = base.clone();
                            ws[j] = w2.clone();
                            let v = self.words(&ws).scale(c2);
                            acc.add_assign(&v);
                        }
                        acc
                    }
                };
                if inner.is_zero() {
                    continue;
                }
                let term = inner.times_difference(j, i0, (1 - k - p) as i32).scale(&CPoly::constant(coeff));
                total.add_assign(&term);
            }
        }
        self.memo.insert(words.to_vec(), total.clone());
        total
    }
}

pub fn sphere_correlator(insertions: &[Insertion]) -> Result<PointRational> {
    SphereEngine::new().correlator(insertions)
}

/// Whether every reordering of the insertions gives the same function of
/// the labelled points.
pub fn permutation_invariance(insertions: &[Insertion]) -> Result<bool> {
    let mut engine = SphereEngine::new();
    let reference = engine.correlator(insertions)?;
    let n = insertions.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut ok = true;
    permutations(&mut perm, 0, &mut |p| {
        if !ok {
            return;
        }
        let reordered: Vec<Insertion> = p.iter().map(|&i| insertions[i].clone()).collect();
        let r = match engine.correlator(&reordered) {
            Ok(r) => r,
            Err(_) => {
                ok = false;
                return;
            }
        };
        // variable t of r is the point of insertion p[t]
        ok = r.relabel(p, n) == reference;
    });
    Ok(ok)
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::virasoro::descendant;

    fn t(k: i32) -> PBWVector {
        PBWVector::mode(k)
    }

    fn at(v: PBWVector, l: &str) -> Insertion {
        Insertion::new(v, l)
    }

    fn half_c() -> CPoly {
        CPoly::c().scale(&rat(1, 2))
    }

    #[test]
    fn two_and_three_point() {
        let tt = sphere_correlator(&[at(t(2), "x"), at(t(2), "y")]).unwrap();
        assert_eq!(tt, PointRational::inverse_difference_power(2, 0, 1, 4).scale(&half_c()));
        let ttt = sphere_correlator(&[at(t(2), "a"), at(t(2), "b"), at(t(2), "c")]).unwrap();
        let expect = PointRational::inverse_difference_power(3, 0, 1, 2)
            .mul(&PointRational::inverse_difference_power(3, 0, 2, 2))
            .mul(&PointRational::inverse_difference_power(3, 1, 2, 2))
            .scale(&CPoly::c());
        assert_eq!(ttt, expect);
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(sphere_correlator(&[]).unwrap(), PointRational::one(0));
        let one = PBWVector::vacuum();
        assert_eq!(sphere_correlator(&[at(one.clone(), "a"), at(one, "b")]).unwrap(), PointRational::one(2));
        for k in 2..=6 {
            assert!(sphere_correlator(&[at(t(k), "w")]).unwrap().is_zero());
        }
        assert!(sphere_correlator(&[at(t(2), "x"), at(t(2), "x")]).is_err());
    }

    #[test]
    fn permutations_agree() {
        assert!(permutation_invariance(&[at(t(2), "a"), at(t(2), "b"), at(t(2), "c")]).unwrap());
        assert!(permutation_invariance(&[at(t(3), "a"), at(t(2), "b")]).unwrap());
        let t22 = descendant(2, 2).unwrap();
        assert!(permutation_invariance(&[at(t22, "a"), at(t(2), "b"), at(t(3), "c")]).unwrap());
    }
}
