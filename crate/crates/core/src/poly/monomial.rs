use smallvec::SmallVec;

/// Exponent vector indexed by the variables of a ring.
///
/// The derived `Ord` is plain lexicographic comparison of the exponent
/// vectors; it is used for canonical storage, not as a term order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub(crate) fn set_exponent(&mut self, i: usize, e: u16) {
        self.0[i] = e;
    }

    /// Moves exponent `i` to position `map[i]` of a monomial in `nvars`
    /// variables.
    pub(crate) fn relabel(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut out = Monomial::one(nvars);
        for (i, &e) in self.0.iter().enumerate() {
            out.0[map[i]] += e;
        }
        out
    }

    /// All monomials of total degree `d` in `nvars` variables, in
    /// descending lexicographic order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; nvars];
        fill(&mut out, &mut cur, 0, d);
        out
    }
}

fn fill(out: &mut Vec<Monomial>, cur: &mut [u16], i: usize, left: u32) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Monomial::one(0));
        }
        return;
    }
    if i == cur.len() - 1 {
        cur[i] = left as u16;
        out.push(Monomial::from_exponents(cur));
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e as u16;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_enumeration_counts_binomials() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(7, 2).len(), 28);
        assert_eq!(Monomial::all_of_degree(7, 0), vec![Monomial::one(7)]);
        assert_eq!(Monomial::all_of_degree(0, 1).len(), 0);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[1, 1, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.div(&b), Some(Monomial::from_exponents(&[1, 0, 0])));
        assert_eq!(b.div(&a), None);
        let c = Monomial::from_exponents(&[0, 0, 3]);
        assert!(a.is_coprime(&c));
        assert_eq!(a.lcm(&c), Monomial::from_exponents(&[2, 1, 3]));
    }
}
