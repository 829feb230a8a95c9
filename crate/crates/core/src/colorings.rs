//! Fox p-colorings of rational links drawn in standard form.
//!
//! The diagram is assembled from one elementary crossing by tangle sum
//! (horizontal twists) and tangle product (vertical twists); `1/[1]` and
//! `[1]` are the same picture, so a single crossing serves both directions.
//! Strand segments are merged with a union-find as tangles are glued, and
//! every crossing records `(over, under_in, under_out)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::relations::hopf_relation;
use crate::ring::{alpha_substitute, exact_divide, LaurentPoly};
use crate::tangle_model::{closure_kind, Closure, ConwayCode, Entry};

/// Arc count and one relation `2·over ≡ under_in + under_out` per crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSystem {
    pub arcs: usize,
    pub relations: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Copy, Debug)]
struct Ends {
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
}

#[derive(Default)]
struct Builder {
    parent: Vec<usize>,
    crossings: Vec<[usize; 3]>,
}

impl Builder {
    fn seg(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx] = ry;
        }
    }

    /// `[1]` has the NW–SE strand on top, `[-1]` the SW–NE strand.
    fn crossing(&mut self, positive: bool) -> Ends {
        let (o, u1, u2) = (self.seg(), self.seg(), self.seg());
        self.crossings.push([o, u1, u2]);
        if positive {
            Ends { nw: o, se: o, sw: u1, ne: u2 }
        } else {
            Ends { sw: o, ne: o, nw: u1, se: u2 }
        }
    }

    fn zero(&mut self) -> Ends {
        let (top, bottom) = (self.seg(), self.seg());
        Ends { nw: top, ne: top, sw: bottom, se: bottom }
    }

    fn inf(&mut self) -> Ends {
        let (left, right) = (self.seg(), self.seg());
        Ends { nw: left, sw: left, ne: right, se: right }
    }

    fn sum(&mut self, t: Ends, s: Ends) -> Ends {
        self.union(t.ne, s.nw);
        self.union(t.se, s.sw);
        Ends { nw: t.nw, sw: t.sw, ne: s.ne, se: s.se }
    }

    fn product(&mut self, t: Ends, s: Ends) -> Ends {
        self.union(t.sw, s.nw);
        self.union(t.se, s.ne);
        Ends { nw: t.nw, ne: t.ne, sw: s.sw, se: s.se }
    }

    fn twist(&mut self, n: i64, vertical: bool) -> Ends {
        let mut acc = self.crossing(n > 0);
        for _ in 1..n.unsigned_abs() {
            let c = self.crossing(n > 0);
            acc = if vertical { self.product(acc, c) } else { self.sum(acc, c) };
        }
        acc
    }

    fn horizontal(&mut self, e: Entry) -> Ends {
        match e {
            Entry::Inf => self.inf(),
            Entry::Int(0) => self.zero(),
            Entry::Int(n) => self.twist(n, false),
        }
    }

    /// The tangle 1/[m].
    fn vertical(&mut self, e: Entry) -> Ends {
        match e {
            Entry::Inf => self.zero(),
            Entry::Int(0) => self.inf(),
            Entry::Int(n) => self.twist(n, true),
        }
    }
}

/// Crossing relations of the standard representation of `code` under the
/// given closure. Entries may be 0 or ∞ anywhere (the corresponding twist is
/// the 0 or ∞ tangle), so the construction is total.
pub fn diagram_from_code(code: &ConwayCode, closure: Closure) -> ColoringSystem {
    let mut b = Builder::default();
    let entries = code.entries();
    let mut t = b.horizontal(entries[0]);
    for (k, &e) in entries.iter().enumerate().skip(1) {
        t = if k % 2 == 1 {
            let v = b.vertical(e);
            b.product(t, v)
        } else {
            let h = b.horizontal(e);
            b.sum(t, h)
        };
    }
    match closure {
        Closure::Numerator => {
            b.union(t.nw, t.ne);
            b.union(t.sw, t.se);
        }
        Closure::Denominator => {
            b.union(t.nw, t.sw);
            b.union(t.ne, t.se);
        }
    }
    let mut ids: HashMap<usize, usize> = HashMap::new();
    for s in 0..b.parent.len() {
        let r = b.find(s);
        let next = ids.len();
        ids.entry(r).or_insert(next);
    }
    let crossings = std::mem::take(&mut b.crossings);
    let relations = crossings
        .into_iter()
        .map(|[o, i, j]| (ids[&b.find(o)], ids[&b.find(i)], ids[&b.find(j)]))
        .collect();
    ColoringSystem { arcs: ids.len(), relations }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::InvalidArgument(format!("{p} is not a prime below 2^32")));
    }
    Ok(())
}

fn inv_mod(x: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (x % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl ColoringSystem {
    /// Dimension of the solution space over ℤ/p.
    pub fn nullity(&self, p: u64) -> Result<usize> {
        check_prime(p)?;
        let n = self.arcs;
        let mut rows: Vec<Vec<u64>> = self
            .relations
            .iter()
            .map(|&(o, i, j)| {
                let mut r = vec![0u64; n];
                r[o] = (r[o] + 2) % p;
                r[i] = (r[i] + p - 1) % p;
                r[j] = (r[j] + p - 1) % p;
                r
            })
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = inv_mod(rows[rank][col], p);
            for x in rows[rank].iter_mut() {
                *x = *x * inv % p;
            }
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let f = rows[r][col];
                    for c in col..n {
                        rows[r][c] = (rows[r][c] + p * p - f * rows[rank][c]) % p;
                    }
                }
            }
            rank += 1;
        }
        Ok(n - rank)
    }

    /// Whether an arc assignment satisfies every crossing relation.
    pub fn satisfied_by(&self, colors: &[u64], p: u64) -> bool {
        self.relations.iter().all(|&(o, i, j)| (2 * colors[o]) % p == (colors[i] + colors[j]) % p)
    }
}

/// col_p of the rational link of `code`: p to the nullity of its coloring
/// system. The closure defaults to the parity rule.
pub fn count_fox_colorings(code: &ConwayCode, p: u64, closure: Option<Closure>) -> Result<BigUint> {
    check_prime(p)?;
    let sys = diagram_from_code(code, closure.unwrap_or_else(|| closure_kind(code)));
    let k = sys.nullity(p)?;
    Ok(BigUint::from(p).pow(k as u32))
}

/// Two codes whose cubic values agree exactly or up to a multiple of R_Hopf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringPair {
    pub first: ConwayCode,
    pub second: ConwayCode,
    /// True if the values are equal, false if they differ by a multiple of R_Hopf.
    pub exact: bool,
    pub col_first: BigUint,
    pub col_second: BigUint,
}

impl ColoringPair {
    pub fn differs(&self) -> bool {
        self.col_first != self.col_second
    }
}

/// Pairs up codes with equal values (exactly, or modulo R_Hopf) and records
/// their col_p. Candidates are bucketed by the alpha substitution first,
/// since R_Hopf vanishes there. Pairs come out in input order.
pub fn coloring_pairs(codes: &[(ConwayCode, LaurentPoly)], p: u64) -> Result<Vec<ColoringPair>> {
    check_prime(p)?;
    let hopf = hopf_relation();
    let mut buckets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, (_, v)) in codes.iter().enumerate() {
        buckets.entry(alpha_substitute(v).to_string()).or_default().push(i);
    }
    let mut cols: HashMap<usize, BigUint> = HashMap::new();
    let mut col = |i: usize| -> Result<BigUint> {
        if let Some(c) = cols.get(&i) {
            return Ok(c.clone());
        }
        let c = count_fox_colorings(&codes[i].0, p, None)?;
        cols.insert(i, c.clone());
        Ok(c)
    };
    let mut out = Vec::new();
    for idx in buckets.values() {
        for (n, &i) in idx.iter().enumerate() {
            for &j in &idx[n + 1..] {
                let (vi, vj) = (&codes[i].1, &codes[j].1);
                let exact = vi == vj;
                if !exact && exact_divide(&(vi - vj), &hopf)?.is_none() {
                    continue;
                }
                out.push(ColoringPair {
                    first: codes[i].0.clone(),
                    second: codes[j].0.clone(),
                    exact,
                    col_first: col(i)?,
                    col_second: col(j)?,
                });
            }
        }
    }
    out.sort_by(|x, y| (&x.first, &x.second).cmp(&(&y.first, &y.second)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(xs: &[i64]) -> ConwayCode {
        ConwayCode::from_ints(xs).unwrap()
    }

    fn col(xs: &[i64], p: u64) -> u64 {
        count_fox_colorings(&code(xs), p, None).unwrap().try_into().unwrap()
    }

    #[test]
    fn structure_of_small_diagrams() {
        let s = diagram_from_code(&code(&[1]), Closure::Denominator);
        assert_eq!(s.relations.len(), 1);
        let s = diagram_from_code(&code(&[3]), Closure::Numerator);
        assert_eq!((s.relations.len(), s.arcs), (3, 3));
        let s = diagram_from_code(&code(&[2, 2]), Closure::Denominator);
        assert_eq!((s.relations.len(), s.arcs), (4, 4));
    }

    #[test]
    fn unknot_and_trefoil() {
        for p in [2, 3, 5, 7] {
            assert_eq!(col(&[1], p), p);
        }
        assert_eq!(col(&[3], 3), 9);
        assert_eq!(col(&[3], 7), 7);
        assert_eq!(col(&[2, 1], 3), 9);
        assert_eq!(col(&[2, 2], 5), 25);
        assert_eq!(col(&[2, 2], 3), 3);
    }

    #[test]
    fn zero_and_inf_tangles() {
        let z = ConwayCode::extended(vec![Entry::Int(0)]).unwrap();
        assert_eq!(count_fox_colorings(&z, 5, Some(Closure::Numerator)).unwrap(), BigUint::from(25u32));
        assert_eq!(count_fox_colorings(&z, 5, Some(Closure::Denominator)).unwrap(), BigUint::from(5u32));
        let i = ConwayCode::extended(vec![Entry::Inf]).unwrap();
        assert_eq!(count_fox_colorings(&i, 5, Some(Closure::Numerator)).unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn non_prime_rejected() {
        for p in [0, 1, 4, 9, 15] {
            assert!(count_fox_colorings(&code(&[3]), p, None).is_err());
        }
    }
}
