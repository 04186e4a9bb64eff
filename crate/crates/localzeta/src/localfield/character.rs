//! Additive characters of `K` and quasi-characters of `K^×`.

use super::element::KElement;
use crate::exactnum::CycRat;
use crate::Error;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// `ψ(x) = ζ_q^{c_{d−1}(x)}`: trivial on `π^d𝒪`, nontrivial on `π^{d−1}𝒪`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AdditiveCharacter {
    q: u32,
    d: i64,
}

impl AdditiveCharacter {
    pub fn new(q: u32, d: i64) -> Self {
        AdditiveCharacter { q, d }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn conductor(&self) -> i64 {
        self.d
    }

    /// The exponent `k` with `ψ(x) = ζ_q^k`.
    pub fn exponent(&self, x: &KElement) -> u32 {
        x.digit(self.d - 1)
    }

    pub fn eval(&self, x: &KElement) -> CycRat {
        let k = self.exponent(x);
        if k == 0 {
            CycRat::one()
        } else {
            CycRat::zeta(self.q, k as i64)
        }
    }
}

/// A quasi-character `ω` of `K^×`: a character of `𝒪^×/(1+π^r𝒪)` together
/// with the value `ω(π)`.
///
/// The unit table has level `L = max(r, 1)` and is indexed by
/// `(c₀−1) + (q−1)(c₁ + q·c₂ + …)` for the unit `c₀ + c₁u + …`.
#[derive(Clone)]
pub struct QuasiCharacter {
    q: u32,
    conductor: u32,
    table: Arc<Vec<CycRat>>,
    pi_value: CycRat,
    label: String,
}

/// Number of units modulo `1 + π^L𝒪`.
pub fn unit_group_order(q: u32, level: u32) -> usize {
    (q as usize - 1) * (q as usize).pow(level.saturating_sub(1))
}

/// Index of a unit (`w(x) = 0`) in a level-`L` table.
pub fn unit_index(x: &KElement, level: u32) -> usize {
    let q = x.q() as usize;
    let mut idx = x.digit(0) as usize - 1;
    let mut scale = q - 1;
    for k in 1..level as i64 {
        idx += scale * x.digit(k) as usize;
        scale *= q;
    }
    idx
}

/// Representatives of `𝒪^×/(1+π^L𝒪)` in table order.
pub fn unit_reps(q: u32, level: u32) -> Vec<KElement> {
    let n = unit_group_order(q, level);
    (0..n)
        .map(|mut i| {
            let mut terms = vec![(0i64, (i % (q as usize - 1)) as i64 + 1)];
            i /= q as usize - 1;
            for k in 1..level as i64 {
                terms.push((k, (i % q as usize) as i64));
                i /= q as usize;
            }
            KElement::from_terms(q, &terms)
        })
        .collect()
}

impl QuasiCharacter {
    pub fn trivial(q: u32) -> Self {
        Self::unramified(q, CycRat::one())
    }

    /// Unramified character with `ω(π) = c`.
    pub fn unramified(q: u32, c: CycRat) -> Self {
        QuasiCharacter {
            q,
            conductor: 0,
            table: Arc::new(vec![CycRat::one(); q as usize - 1]),
            pi_value: c,
            label: "1".into(),
        }
    }

    /// Build from a unit table at level `L ≥ 1`. The table is checked to be a
    /// homomorphism; the exact conductor is computed and the table trimmed.
    pub fn from_table(q: u32, level: u32, table: Vec<CycRat>, pi_value: CycRat, label: &str) -> Result<Self, Error> {
        let level = level.max(1);
        if table.len() != unit_group_order(q, level) {
            return Err(Error::Malformed("unit table has wrong size".into()));
        }
        let reps = unit_reps(q, level);
        for (i, a) in reps.iter().enumerate() {
            for (j, b) in reps.iter().enumerate() {
                let k = unit_index(&a.mul(b).truncate(level as i64), level);
                if table[k] != table[i].mul(&table[j]) {
                    return Err(Error::Malformed("unit table is not a homomorphism".into()));
                }
            }
        }
        Ok(Self::from_checked_table(q, level, &reps, table, pi_value, label))
    }

    fn from_checked_table(q: u32, level: u32, reps: &[KElement], table: Vec<CycRat>, pi_value: CycRat, label: &str) -> Self {
        let one = CycRat::one();
        // Exact conductor: least r with χ trivial on 1 + π^r𝒪.
        let mut r = level;
        for cand in 0..level {
            let trivial = reps.iter().zip(table.iter()).all(|(x, v)| {
                let in_sub = if cand == 0 { true } else { x.sub(&KElement::one(q)).valuation() >= cand as i64 };
                !in_sub || *v == one
            });
            if trivial {
                r = cand;
                break;
            }
        }
        let new_level = r.max(1);
        let table = if new_level == level {
            table
        } else {
            unit_reps(q, new_level).iter().map(|x| table[unit_index(x, level)].clone()).collect()
        };
        QuasiCharacter { q, conductor: r, table: Arc::new(table), pi_value, label: label.to_string() }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Exact conductor `r`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_ramified(&self) -> bool {
        self.conductor > 0
    }

    /// Level of the stored unit table, `max(r, 1)`.
    pub fn table_level(&self) -> u32 {
        self.conductor.max(1)
    }

    pub fn table(&self) -> &[CycRat] {
        &self.table
    }

    pub fn pi_value(&self) -> &CycRat {
        &self.pi_value
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_pi_value(&self, c: CycRat) -> Self {
        QuasiCharacter { pi_value: c, ..self.clone() }
    }

    pub fn with_label(&self, label: &str) -> Self {
        QuasiCharacter { label: label.to_string(), ..self.clone() }
    }

    /// `ω(θ)` for a unit `θ`.
    pub fn unit_value(&self, theta: &KElement) -> CycRat {
        debug_assert_eq!(theta.valuation(), 0);
        self.table[unit_index(theta, self.table_level())].clone()
    }

    /// `ω(x) = table(x·u^{−w(x)}) · ω(π)^{w(x)}` (with respect to `π = u`).
    pub fn eval(&self, x: &KElement) -> Result<CycRat, Error> {
        if x.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let v = x.valuation();
        let unit = x.shift(-v);
        Ok(self.unit_value(&unit).mul(&self.pi_value.pow(v)))
    }

    /// `ω⁻¹`.
    pub fn inverse(&self) -> Self {
        QuasiCharacter {
            q: self.q,
            conductor: self.conductor,
            table: Arc::new(self.table.iter().map(|c| c.conj()).collect()),
            pi_value: self.pi_value.inv().expect("ω(π) is nonzero"),
            label: format!("{}^-1", self.label),
        }
    }

    /// Pointwise product `ω·χ`.
    pub fn mul(&self, other: &Self) -> Self {
        let level = self.table_level().max(other.table_level());
        let reps = unit_reps(self.q, level);
        let table = reps.iter().map(|x| self.unit_value(&x.truncate(self.table_level() as i64)).mul(&other.unit_value(&x.truncate(other.table_level() as i64)))).collect();
        Self::from_checked_table(
            self.q,
            level,
            &reps,
            table,
            self.pi_value.mul(&other.pi_value),
            &format!("{}*{}", self.label, other.label),
        )
    }

    /// `ω(−1)`.
    pub fn at_minus_one(&self) -> CycRat {
        self.unit_value(&KElement::constant(self.q, -1))
    }
}

impl PartialEq for QuasiCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.conductor == other.conductor && self.table == other.table && self.pi_value == other.pi_value
    }
}

impl fmt::Debug for QuasiCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiCharacter({}, r={}, ω(π)={})", self.label, self.conductor, self.pi_value)
    }
}

/// All characters of `𝒪^×/(1+π^r𝒪)` (as unramified-at-π quasi-characters
/// with `ω(π) = 1`), each labeled with its exact conductor.
///
/// The group is decomposed greedily: each new generator `g` is added with
/// the least `e` such that `g^e` lies in the span so far, and characters are
/// extended by choosing `e`-th roots.
pub fn enumerate_characters(q: u32, r: i64) -> Result<Vec<QuasiCharacter>, Error> {
    if r < 0 {
        return Err(Error::NegativeConductor);
    }
    if r == 0 {
        return Ok(vec![QuasiCharacter::trivial(q)]);
    }
    let level = r as u32;
    let reps = unit_reps(q, level);
    let n = reps.len();
    let mul = |a: usize, b: usize| unit_index(&reps[a].mul(&reps[b]).truncate(level as i64), level);
    let identity = unit_index(&KElement::one(q), level);

    // coords[x] = exponents of x in terms of the generators chosen so far.
    let mut coords: Vec<Option<Vec<u32>>> = vec![None; n];
    coords[identity] = Some(Vec::new());
    let mut members = vec![identity];
    let mut gens: Vec<(usize, u32, Vec<u32>)> = Vec::new(); // (generator, e, coords of g^e)
    for g in 0..n {
        if coords[g].is_some() {
            continue;
        }
        let mut e = 1u32;
        let mut p = g;
        while coords[p].is_none() {
            p = mul(p, g);
            e += 1;
        }
        let rel = coords[p].clone().unwrap();
        let k = gens.len();
        let mut new_members = Vec::with_capacity(members.len() * e as usize);
        for &h in &members {
            let base = coords[h].clone().unwrap();
            let mut x = h;
            for j in 0..e {
                let mut c = base.clone();
                c.resize(k, 0);
                c.push(j);
                coords[x] = Some(c);
                new_members.push(x);
                x = mul(x, g);
            }
        }
        members = new_members;
        gens.push((g, e, rel));
    }
    debug_assert_eq!(members.len(), n);

    let m = n as u64;
    let mut exps: Vec<Vec<u64>> = vec![Vec::new()];
    for (_, e, rel) in &gens {
        let e = *e as u64;
        let mut next = Vec::new();
        for b in &exps {
            let a: u64 = rel.iter().zip(b.iter()).map(|(&c, &bi)| c as u64 * bi).sum::<u64>() % m;
            debug_assert_eq!(a % e, 0);
            for t in 0..e {
                let mut nb = b.clone();
                nb.push((a / e + t * (m / e)) % m);
                next.push(nb);
            }
        }
        exps = next;
    }

    let mut roots: HashMap<u64, CycRat> = HashMap::new();
    let mut chars: Vec<(u32, Vec<u64>, QuasiCharacter)> = exps
        .into_iter()
        .map(|b| {
            let vals: Vec<u64> = (0..n)
                .map(|x| {
                    let c = coords[x].as_ref().unwrap();
                    c.iter().zip(b.iter()).map(|(&ci, &bi)| ci as u64 * bi).sum::<u64>() % m
                })
                .collect();
            let table = vals
                .iter()
                .map(|&v| roots.entry(v).or_insert_with(|| CycRat::zeta(m as u32, v as i64)).clone())
                .collect();
            let ch = QuasiCharacter::from_checked_table(q, level, &reps, table, CycRat::one(), "");
            (ch.conductor, vals, ch)
        })
        .collect();
    chars.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut counters: HashMap<u32, usize> = HashMap::new();
    Ok(chars
        .into_iter()
        .map(|(cond, _, ch)| {
            let k = counters.entry(cond).or_insert(0);
            let label = if cond == 0 { "1".to_string() } else { format!("w{}.{}", cond, k) };
            *k += 1;
            ch.with_label(&label)
        })
        .collect())
}
