//! Buchberger's algorithm over submodules of a free module `S^r`.
//!
//! Ideals are the rank-one case. Terms carry a component index and are
//! ordered position-over-term: a smaller component index is larger, ties are
//! broken by the monomial order.

use std::cmp::Ordering;
use std::time::Instant;

use super::GbStats;
use crate::error::{Error, Result};
use crate::poly::{Coeff, Field, Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VTerm {
    pub comp: u32,
    pub mon: Monomial,
    pub coeff: Coeff,
}

/// Vector polynomial, terms strictly descending in the engine order.
pub(crate) type VPoly = Vec<VTerm>;

#[derive(Clone, Debug, Default)]
pub(crate) struct Limits {
    pub degree_cap: Option<u32>,
    pub deadline: Option<Instant>,
}

pub(crate) struct Output {
    pub basis: Vec<VPoly>,
    pub stats: GbStats,
    pub truncated: bool,
}

pub(crate) struct Engine<'a> {
    pub field: Field,
    pub order: &'a MonomialOrder,
    /// Degree shift of each component, used only for pair selection.
    pub shifts: Vec<u32>,
    pub limits: Limits,
    start: Instant,
}

struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
    /// Sugar degree, equal to the lcm degree for homogeneous input.
    deg: u32,
}

impl<'a> Engine<'a> {
    pub fn new(field: Field, order: &'a MonomialOrder, limits: Limits) -> Self {
        Engine {
            field,
            order,
            shifts: Vec::new(),
            limits,
            start: Instant::now(),
        }
    }

    pub fn with_shifts(mut self, shifts: Vec<u32>) -> Self {
        self.shifts = shifts;
        self
    }

    #[inline]
    pub fn cmp_terms(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.order.cmp(a.1, b.1))
    }

    pub fn sort(&self, mut p: VPoly) -> VPoly {
        p.sort_by(|a, b| self.cmp_terms((b.comp, &b.mon), (a.comp, &a.mon)));
        // merge duplicates
        let mut out: VPoly = Vec::with_capacity(p.len());
        for t in p {
            match out.last_mut() {
                Some(l) if l.comp == t.comp && l.mon == t.mon => {
                    l.coeff = self.field.add(&l.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !self.field.is_zero(&t.coeff));
        out
    }

    fn shift(&self, comp: u32) -> u32 {
        self.shifts.get(comp as usize).copied().unwrap_or(0)
    }

    fn check_time(&self, stats: &GbStats) -> Result<()> {
        // a single step can be slow once coefficients grow, so check every one
        if let Some(d) = self.limits.deadline {
            if Instant::now() >= d {
                let mut stats = stats.clone();
                stats.wall_time_secs = self.start.elapsed().as_secs_f64();
                return Err(Error::Timeout { stats });
            }
        }
        Ok(())
    }

    /// `p - c * m * g`, where the result is known to cancel nothing in particular.
    fn sub_mul(&self, p: &[VTerm], c: &Coeff, m: &Monomial, g: &[VTerm]) -> VPoly {
        let f = self.field;
        let mut out = Vec::with_capacity(p.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut gm: Option<(u32, Monomial)> = g.first().map(|t| (t.comp, t.mon.mul(m)));
        while i < p.len() {
            let Some((gc, gmon)) = &gm else { break };
            match self.cmp_terms((p[i].comp, &p[i].mon), (*gc, gmon)) {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(VTerm {
                        comp: *gc,
                        mon: gmon.clone(),
                        coeff: f.neg(&f.mul(c, &g[j].coeff)),
                    });
                    j += 1;
                    gm = g.get(j).map(|t| (t.comp, t.mon.mul(m)));
                }
                Ordering::Equal => {
                    let v = f.sub(&p[i].coeff, &f.mul(c, &g[j].coeff));
                    if !f.is_zero(&v) {
                        out.push(VTerm {
                            comp: p[i].comp,
                            mon: p[i].mon.clone(),
                            coeff: v,
                        });
                    }
                    i += 1;
                    j += 1;
                    gm = g.get(j).map(|t| (t.comp, t.mon.mul(m)));
                }
            }
        }
        out.extend(p[i..].iter().cloned());
        while j < g.len() {
            out.push(VTerm {
                comp: g[j].comp,
                mon: g[j].mon.mul(m),
                coeff: f.neg(&f.mul(c, &g[j].coeff)),
            });
            j += 1;
        }
        out
    }

    fn find_reducer<'b>(&self, t: &VTerm, basis: &'b [VPoly], active: &[usize]) -> Option<&'b VPoly> {
        active
            .iter()
            .map(|&k| &basis[k])
            .find(|g| g[0].comp == t.comp && g[0].mon.divides(&t.mon))
    }

    /// Reduces `p` by the listed basis elements (first divisor wins). With
    /// `full` set, tail terms are reduced as well.
    pub fn reduce(
        &self,
        p: VPoly,
        basis: &[VPoly],
        active: &[usize],
        full: bool,
        stats: &GbStats,
    ) -> Result<VPoly> {
        let mut rem: VPoly = Vec::new();
        let mut p = p;
        let mut pos = 0;
        while pos < p.len() {
            self.check_time(stats)?;
            let reducer = self.find_reducer(&p[pos], basis, active);
            match reducer {
                Some(g) => {
                    let m = g[0].mon.quotient_of(&p[pos].mon).unwrap();
                    let c = self.field.div(&p[pos].coeff, &g[0].coeff).unwrap();
                    // the leading terms cancel exactly
                    let tail = self.sub_mul(&p[pos + 1..], &c, &m, &g[1..]);
                    p = tail;
                    pos = 0;
                }
                None => {
                    if !full {
                        rem.extend(p.drain(pos..));
                        break;
                    }
                    rem.push(p[pos].clone());
                    pos += 1;
                }
            }
        }
        Ok(rem)
    }

    fn make_monic(&self, p: VPoly) -> VPoly {
        let inv = self.field.inv(&p[0].coeff).expect("nonzero lead");
        if self.field.is_one(&inv) {
            return p;
        }
        p.into_iter()
            .map(|t| VTerm {
                coeff: self.field.mul(&t.coeff, &inv),
                ..t
            })
            .collect()
    }

    fn spoly(&self, f: &VPoly, g: &VPoly, lcm: &Monomial) -> VPoly {
        // both monic
        let mf = f[0].mon.quotient_of(lcm).unwrap();
        let mg = g[0].mon.quotient_of(lcm).unwrap();
        let one = self.field.one();
        let fm: VPoly = f[1..]
            .iter()
            .map(|t| VTerm {
                comp: t.comp,
                mon: t.mon.mul(&mf),
                coeff: t.coeff.clone(),
            })
            .collect();
        self.sub_mul(&fm, &one, &mg, &g[1..])
    }

    pub fn buchberger(&mut self, gens: Vec<VPoly>) -> Result<Output> {
        self.start = Instant::now();
        let mut stats = GbStats {
            field: self.field,
            ..GbStats::default()
        };
        let mut basis: Vec<VPoly> = Vec::new();
        let mut sugar: Vec<u32> = Vec::new();
        let mut active: Vec<usize> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut truncated = false;

        // Seed: insert generators one at a time, smallest degree first.
        let mut seeds: Vec<VPoly> = gens.into_iter().filter(|p| !p.is_empty()).collect();
        // Degree-first selection for graded input, the monomial order otherwise.
        let graded = seeds
            .iter()
            .all(|p| p.iter().all(|t| t.mon.degree() + self.shift(t.comp) == self.top_degree(p)));
        seeds.sort_by_key(|p| p[0].mon.degree() + self.shift(p[0].comp));
        for g in seeds {
            let h = self.reduce(g, &basis, &active, false, &stats)?;
            if h.is_empty() {
                continue;
            }
            let h = self.make_monic(h);
            stats.max_degree = stats.max_degree.max(h[0].mon.degree());
            if h[0].mon.is_one() && self.is_unit_row(&h) {
                return Ok(self.unit_output(h, stats));
            }
            sugar.push(self.top_degree(&h));
            self.insert(h, &mut basis, &sugar, &mut active, &mut pairs);
        }

        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&pairs[a], &pairs[b]);
                    let by_deg = if graded { pa.deg.cmp(&pb.deg) } else { Ordering::Equal };
                    by_deg
                        .then_with(|| self.cmp_terms((pa.comp, &pa.lcm), (pb.comp, &pb.lcm)))
                        .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
                })
                .unwrap();
            if let Some(cap) = self.limits.degree_cap {
                if pairs[best].deg > cap {
                    truncated = true;
                    if graded {
                        break;
                    }
                    pairs.swap_remove(best);
                    continue;
                }
            }
            let pair = pairs.swap_remove(best);
            stats.spairs_processed += 1;
            stats.max_degree = stats.max_degree.max(pair.lcm.degree());
            let s = self.spoly(&basis[pair.i], &basis[pair.j], &pair.lcm);
            let h = self.reduce(s, &basis, &active, true, &stats)?;
            if h.is_empty() {
                stats.zero_reductions += 1;
                continue;
            }
            let h = self.make_monic(h);
            if h[0].mon.is_one() && self.is_unit_row(&h) {
                stats.wall_time_secs = self.start.elapsed().as_secs_f64();
                return Ok(self.unit_output(h, stats));
            }
            sugar.push(pair.deg);
            self.insert(h, &mut basis, &sugar, &mut active, &mut pairs);
            if self.field == Field::Rational {
                self.tail_reduce_by_newest(&mut basis, &active, &stats)?;
            }
        }

        // Active elements form a minimal basis; interreduce tails.
        let mut reduced: Vec<VPoly> = Vec::with_capacity(active.len());
        for (k, &idx) in active.iter().enumerate() {
            let others: Vec<usize> = active
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, &i)| i)
                .collect();
            let g = basis[idx].clone();
            let head = g[0].clone();
            let tail = self.reduce(g[1..].to_vec(), &basis, &others, true, &stats)?;
            let mut full = vec![head];
            full.extend(tail);
            reduced.push(self.make_monic(full));
        }
        reduced.sort_by(|a, b| self.cmp_terms((a[0].comp, &a[0].mon), (b[0].comp, &b[0].mon)));
        stats.basis_size = reduced.len();
        stats.wall_time_secs = self.start.elapsed().as_secs_f64();
        Ok(Output {
            basis: reduced,
            stats,
            truncated,
        })
    }

    // Over QQ, stale tails make coefficients explode in later S-polynomials.
    fn tail_reduce_by_newest(&self, basis: &mut [VPoly], active: &[usize], stats: &GbStats) -> Result<()> {
        let newest = *active.last().unwrap();
        let hm = basis[newest][0].mon.clone();
        let hc = basis[newest][0].comp;
        for &g in &active[..active.len() - 1] {
            if !basis[g][1..].iter().any(|t| t.comp == hc && hm.divides(&t.mon)) {
                continue;
            }
            let tail = self.reduce(basis[g][1..].to_vec(), basis, active, true, stats)?;
            let head = basis[g][0].clone();
            basis[g] = std::iter::once(head).chain(tail).collect();
        }
        Ok(())
    }

    fn top_degree(&self, p: &VPoly) -> u32 {
        p.iter().map(|t| t.mon.degree() + self.shift(t.comp)).max().unwrap_or(0)
    }

    // A constant lead in a rank-one setting means the ideal is the whole ring.
    fn is_unit_row(&self, h: &VPoly) -> bool {
        self.shifts.len() <= 1
            && h.iter().all(|t| t.comp == h[0].comp)
    }

    fn unit_output(&self, h: VPoly, mut stats: GbStats) -> Output {
        let one = vec![VTerm {
            comp: h[0].comp,
            mon: h[0].mon.clone(),
            coeff: self.field.one(),
        }];
        stats.basis_size = 1;
        stats.wall_time_secs = self.start.elapsed().as_secs_f64();
        Output {
            basis: vec![one],
            stats,
            truncated: false,
        }
    }

    /// Gebauer–Möller update.
    fn insert(&self, h: VPoly, basis: &mut Vec<VPoly>, sugar: &[u32], active: &mut Vec<usize>, pairs: &mut Vec<Pair>) {
        let hi = basis.len();
        let hc = h[0].comp;
        let hm = h[0].mon.clone();
        basis.push(h);
        // the product criterion only holds for ideals, not for modules
        let product_ok = self.shifts.len() <= 1;

        struct Cand {
            g: usize,
            lcm: Monomial,
            coprime: bool,
        }
        let mut cands: Vec<Cand> = active
            .iter()
            .filter(|&&g| basis[g][0].comp == hc)
            .map(|&g| {
                let gm = &basis[g][0].mon;
                Cand {
                    g,
                    lcm: hm.lcm(gm),
                    coprime: product_ok && hm.is_coprime(gm),
                }
            })
            .collect();

        let mut kept: Vec<Cand> = Vec::new();
        while let Some(c) = cands.pop() {
            let dominated = !c.coprime
                && (cands.iter().any(|o| o.lcm.divides(&c.lcm))
                    || kept.iter().any(|o| o.lcm.divides(&c.lcm)));
            if !dominated {
                kept.push(c);
            }
        }

        pairs.retain(|p| {
            if p.comp != hc || !hm.divides(&p.lcm) {
                return true;
            }
            let li = hm.lcm(&basis[p.i][0].mon);
            let lj = hm.lcm(&basis[p.j][0].mon);
            li == p.lcm || lj == p.lcm
        });

        let pair_sugar = |g: usize, lcm: &Monomial| sugar[g] + lcm.degree() - basis[g][0].mon.degree();
        for c in kept.into_iter().filter(|c| !c.coprime) {
            let deg = pair_sugar(c.g, &c.lcm).max(pair_sugar(hi, &c.lcm));
            let (i, j) = if c.g < hi { (c.g, hi) } else { (hi, c.g) };
            pairs.push(Pair {
                i,
                j,
                comp: hc,
                lcm: c.lcm,
                deg,
            });
        }

        active.retain(|&g| !(basis[g][0].comp == hc && hm.divides(&basis[g][0].mon)));
        active.push(hi);
    }
}
