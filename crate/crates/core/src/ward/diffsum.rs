use std::collections::{BTreeMap, HashMap};

use crate::algebra::{int, CPoly, MPoly, PointRational};

/// Linear combination of products `Π_{a<b} (w_a - w_b)^{n_ab}` with integer
/// exponents of either sign. Not canonical; derivatives and products by a
/// difference power only touch exponents. Converted to a canonical
/// [`PointRational`] once at the end.
#[derive(Clone, Debug, Default)]
pub(crate) struct DiffSum {
    nv: usize,
    terms: BTreeMap<Vec<i32>, CPoly>,
}

fn pair_index(nv: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < nv);
    a * (2 * nv - a - 1) / 2 + (b - a - 1)
}

fn pairs(nv: usize) -> Vec<(usize, usize)> {
    (0..nv).flat_map(|a| (a + 1..nv).map(move |b| (a, b))).collect()
}

impl DiffSum {
    pub fn zero(nv: usize) -> Self {
        DiffSum { nv, terms: BTreeMap::new() }
    }

    pub fn one(nv: usize) -> Self {
        let mut s = Self::zero(nv);
        s.terms.insert(vec![0; nv * nv.saturating_sub(1) / 2], CPoly::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, e: Vec<i32>, c: CPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (e, c) in &o.terms {
            self.push(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &CPoly) -> Self {
        let mut out = Self::zero(self.nv);
        for (e, x) in &self.terms {
            out.push(e.clone(), x * c);
        }
        out
    }

    /// Multiplies by `(w_i - w_j)^n`.
    pub fn times_difference(&self, i: usize, j: usize, n: i32) -> Self {
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, if n % 2 == 0 { 1 } else { -1 }) };
        let p = pair_index(self.nv, a, b);
        let s = CPoly::constant(int(sign));
        let mut out = Self::zero(self.nv);
        for (e, x) in &self.terms {
            let mut e2 = e.clone();
            e2[p] += n;
            out.push(e2, x * &s);
        }
        out
    }

    /// Partial derivative in `w_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nv);
        for (a, b) in pairs(self.nv) {
            if a != i && b != i {
                continue;
            }
            let p = pair_index(self.nv, a, b);
            let sign = if a == i { 1 } else { -1 };
            for (e, x) in &self.terms {
                if e[p] == 0 {
                    continue;
                }
                let mut e2 = e.clone();
                let n = e2[p];
                e2[p] -= 1;
                out.push(e2, x.scale(&int(i64::from(sign * n))));
            }
        }
        out
    }

    pub fn to_point_rational(&self) -> PointRational {
        let nv = self.nv;
        let ps = pairs(nv);
        let mut den = BTreeMap::new();
        for (p, &(a, b)) in ps.iter().enumerate() {
            let worst = self.terms.keys().map(|e| -e[p]).max().unwrap_or(0);
            if worst > 0 {
                den.insert((a, b), worst as u32);
            }
        }
        let shifts: Vec<Vec<u32>> = self
            .terms
            .keys()
            .map(|e| {
                ps.iter()
                    .enumerate()
                    .map(|(p, ab)| (e[p] + den.get(ab).map_or(0, |&d| d as i32)) as u32)
                    .collect()
            })
            .collect();
        let num = self.numerator_packed(&ps, &shifts).unwrap_or_else(|| self.numerator_generic(&ps, &shifts));
        PointRational::from_parts(num, den)
    }

    fn numerator_generic(&self, ps: &[(usize, usize)], shifts: &[Vec<u32>]) -> MPoly<CPoly> {
        let nv = self.nv;
        let mut powers: HashMap<(usize, u32), MPoly<CPoly>> = HashMap::new();
        let mut num = MPoly::zero(nv);
        for (c, sh) in self.terms.values().zip(shifts) {
            let mut t = MPoly::constant(nv, c.clone());
            for (p, &(a, b)) in ps.iter().enumerate() {
                if sh[p] == 0 {
                    continue;
                }
                let pw = powers
                    .entry((p, sh[p]))
                    .or_insert_with(|| MPoly::<CPoly>::var(nv, a).sub(&MPoly::var(nv, b)).pow(sh[p]));
                t = t.mul(pw);
            }
            num = num.add(&t);
        }
        num
    }

    /// Integer expansion with exponents packed 8 bits per variable. `None`
    /// when the packing or `i128` arithmetic would overflow.
    fn numerator_packed(&self, ps: &[(usize, usize)], shifts: &[Vec<u32>]) -> Option<MPoly<CPoly>> {
        let nv = self.nv;
        if nv > 8 {
            return None;
        }
        let mut per_var = vec![0u32; nv];
        for sh in shifts {
            let mut deg = vec![0u32; nv];
            for (p, &(a, b)) in ps.iter().enumerate() {
                deg[a] += sh[p];
                deg[b] += sh[p];
            }
            for v in 0..nv {
                per_var[v] = per_var[v].max(deg[v]);
            }
        }
        if per_var.iter().any(|&d| d > 255) {
            return None;
        }
        let unit = |v: usize| 1u64 << (8 * v);
        // common denominator of each c-degree across all coefficients
        let max_deg = self.terms.values().filter_map(CPoly::degree).max()?;
        let mut lcm = vec![num_bigint::BigInt::from(1); max_deg + 1];
        for c in self.terms.values() {
            for (d, r) in c.coeffs().iter().enumerate() {
                lcm[d] = num_integer::Integer::lcm(&lcm[d], r.denom());
            }
        }
        let mut acc: Vec<HashMap<u64, i128>> = vec![HashMap::new(); max_deg + 1];
        for (c, sh) in self.terms.values().zip(shifts) {
            let mut prod: HashMap<u64, i128> = HashMap::from([(0u64, 1i128)]);
            for (p, &(a, b)) in ps.iter().enumerate() {
                let n = sh[p];
                if n == 0 {
                    continue;
                }
                let mut next: HashMap<u64, i128> = HashMap::with_capacity(prod.len() * (n as usize + 1));
                let mut binom: i128 = 1;
                for k in 0..=n {
                    // x_a^k (-x_b)^(n-k)
                    let coef = if (n - k) % 2 == 0 { binom } else { -binom };
                    let shift = unit(a) * u64::from(k) + unit(b) * u64::from(n - k);
                    for (&key, &v) in &prod {
                        let e = next.entry(key + shift).or_insert(0);
                        *e = e.checked_add(v.checked_mul(coef)?)?;
                    }
                    binom = binom.checked_mul(i128::from(n - k))? / i128::from(k + 1);
                }
                next.retain(|_, v| *v != 0);
                prod = next;
            }
            for (d, r) in c.coeffs().iter().enumerate() {
                let scaled = r.numer() * (&lcm[d] / r.denom());
                let scaled: i128 = i128::try_from(scaled).ok()?;
                if scaled == 0 {
                    continue;
                }
                for (&key, &v) in &prod {
                    let e = acc[d].entry(key).or_insert(0);
                    *e = e.checked_add(v.checked_mul(scaled)?)?;
                }
            }
        }
        let mut coeffs: BTreeMap<u64, Vec<crate::algebra::Rational>> = BTreeMap::new();
        for (d, map) in acc.iter().enumerate() {
            for (&key, &v) in map {
                if v == 0 {
                    continue;
                }
                let entry = coeffs.entry(key).or_insert_with(|| vec![int(0); max_deg + 1]);
                entry[d] = crate::algebra::Rational::new(v.into(), lcm[d].clone());
            }
        }
        let mut num = MPoly::zero(nv);
        for (key, cs) in coeffs {
            let exps = (0..nv).map(|v| ((key >> (8 * v)) & 0xff) as u32).collect();
            let c = CPoly::from_coeffs(cs);
            if !c.is_zero() {
                num.add_term(exps, c);
            }
        }
        Some(num)
    }
}
