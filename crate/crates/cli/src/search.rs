//! Randomized / exhaustive search over construction parameters.
//!
//! Candidates are indexed deterministically: exhaustive mode walks the
//! product space (gamma quadruple) x (v1) x (v2) in lexicographic order,
//! random mode derives one RNG per candidate index from the master seed.
//! Either way the result set depends only on the configuration, not on
//! the worker count: chunks are processed in parallel but merged in index
//! order, and the ledger is sorted before emission.
//!
//! A candidate reaches the expensive pipeline (matrix build, Gray map,
//! weight enumeration) only after passing the six cheap identities that
//! are jointly equivalent to self-duality of the built matrix; the
//! unit/non-unit corollary screen additionally rejects impossible
//! candidates when it applies.

use crate::pipeline::ChainChoice;
use anyhow::{bail, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sdcodes::bincode::{classify, rains_bound, Family, WeightProfile};
use sdcodes::construct::{
    build_generator, corollary_screen, is_self_dual_over_ring, ConstructionParams, ScreenVerdict,
};
use sdcodes::gray::binary_image;
use sdcodes::groupring::{GroupRingElem, GroupSpec};
use sdcodes::rings::{emit_vector, parse_vector, RingElem, RingId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum GammaDomain {
    /// All |R|^4 border quadruples.
    Exhaustive,
    /// One fixed quadruple in ring shorthand.
    Fixed(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TargetSpec {
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<i64>,
}

impl TargetSpec {
    fn matches(&self, profile: &WeightProfile) -> bool {
        if profile.d != self.d {
            return false;
        }
        let fam = profile.family.as_ref();
        if let Some(want) = self.family {
            if fam.map(|f| f.family) != Some(want) {
                return false;
            }
        }
        if self.alpha.is_some() && fam.and_then(|f| f.alpha) != self.alpha {
            return false;
        }
        if self.beta.is_some() && fam.and_then(|f| f.beta) != self.beta {
            return false;
        }
        if self.gamma.is_some() && fam.and_then(|f| f.gamma) != self.gamma {
            return false;
        }
        true
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    pub group: String,
    pub ring: String,
    pub gamma_domain: GammaDomain,
    pub target: TargetSpec,
    pub seed: u64,
    /// Maximum number of candidates to evaluate in this run.
    pub budget: u64,
    /// Resume offset into the candidate index space.
    #[serde(default)]
    pub start: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LedgerEntry {
    pub fingerprint: String,
    /// Candidates that produced this fingerprint (not an equivalence count).
    pub hits: u64,
    pub candidate_index: u64,
    pub group: String,
    pub ring: String,
    pub gamma: String,
    pub v1: String,
    pub v2: String,
    pub profile: WeightProfile,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchLedger {
    pub config: SearchConfig,
    pub mode: String,
    pub scanned: u64,
    pub prefilter_survivors: u64,
    pub self_dual: u64,
    pub matched: u64,
    pub entries: Vec<LedgerEntry>,
    /// Present when the budget ran out before the candidate space did.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resume_token: Option<u64>,
    pub note: String,
}

impl SearchLedger {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "search {} over {} ({} mode): scanned {}, prefilter kept {}, self-dual {}, matched {}\n",
            self.config.group,
            self.config.ring,
            self.mode,
            self.scanned,
            self.prefilter_survivors,
            self.self_dual,
            self.matched
        );
        for e in &self.entries {
            out.push_str(&format!(
                "  {} hits={} idx={} gamma=({}) v1=({}) v2=({})\n",
                e.fingerprint, e.hits, e.candidate_index, e.gamma, e.v1, e.v2
            ));
        }
        if let Some(tok) = self.resume_token {
            out.push_str(&format!("  budget exhausted; resume with --start {tok}\n"));
        }
        out.push_str(&format!("  note: {}\n", self.note));
        out
    }
}

struct Space {
    group: GroupSpec,
    ring: RingId,
    elements: Vec<RingElem>,
    gammas: Vec<[RingElem; 4]>,
    /// |R|^p, saturating.
    v_count: u64,
    exhaustive: bool,
    total: Option<u64>,
}

fn build_space(config: &SearchConfig) -> Result<Space> {
    let group = GroupSpec::parse(&config.group)?;
    let ring: RingId = config.ring.parse()?;
    let elements: Vec<RingElem> = ring.elements().collect();
    let gammas: Vec<[RingElem; 4]> = match &config.gamma_domain {
        GammaDomain::Fixed(text) => {
            let g = parse_vector(text, ring)?;
            if g.len() != 4 {
                bail!("fixed gamma domain must have 4 entries");
            }
            vec![[g[0], g[1], g[2], g[3]]]
        }
        GammaDomain::Exhaustive => {
            let mut out = Vec::with_capacity(elements.len().pow(4));
            for &a in &elements {
                for &b in &elements {
                    for &c in &elements {
                        for &d in &elements {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
            out
        }
    };
    let p = group.order() as u32;
    let v_count = (elements.len() as u64).checked_pow(p);
    let exhaustive = v_count.is_some_and(|v| v <= config.budget);
    let total = v_count.and_then(|v| {
        v.checked_mul(v).and_then(|vv| vv.checked_mul(gammas.len() as u64))
    });
    Ok(Space {
        group,
        ring,
        elements,
        gammas,
        v_count: v_count.unwrap_or(u64::MAX),
        exhaustive,
        total,
    })
}

impl Space {
    fn candidate(&self, idx: u64, seed: u64) -> ConstructionParams {
        let p = self.group.order();
        let (gamma, c1, c2): ([RingElem; 4], Vec<RingElem>, Vec<RingElem>) = if self.exhaustive {
            let v2i = idx % self.v_count;
            let rest = idx / self.v_count;
            let v1i = rest % self.v_count;
            let gi = (rest / self.v_count) as usize % self.gammas.len();
            (self.gammas[gi], self.decode_v(v1i, p), self.decode_v(v2i, p))
        } else {
            // one deterministic stream per candidate index
            let mut rng = ChaCha8Rng::seed_from_u64(splitmix(seed ^ splitmix(idx)));
            let gi = rng.gen_range(0..self.gammas.len());
            let draw = |rng: &mut ChaCha8Rng| -> Vec<RingElem> {
                (0..p).map(|_| self.elements[rng.gen_range(0..self.elements.len())]).collect()
            };
            let v1 = draw(&mut rng);
            let v2 = draw(&mut rng);
            (self.gammas[gi], v1, v2)
        };
        let v1 = GroupRingElem::from_coeffs(self.group.clone(), self.ring, &c1)
            .expect("sampled coefficients are valid");
        let v2 = GroupRingElem::from_coeffs(self.group.clone(), self.ring, &c2)
            .expect("sampled coefficients are valid");
        ConstructionParams::new(self.group.clone(), self.ring, gamma, v1, v2)
            .expect("group order validated at space construction")
    }

    fn decode_v(&self, mut idx: u64, p: usize) -> Vec<RingElem> {
        let base = self.elements.len() as u64;
        let mut out = Vec::with_capacity(p);
        for _ in 0..p {
            out.push(self.elements[(idx % base) as usize]);
            idx /= base;
        }
        out
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

/// The six identities jointly equivalent to `G G^T = 0` for the built
/// matrix, evaluated without building it: the gamma square sum, the two
/// border identities, commutation, and the two starred-product identities.
fn necessary_conditions_hold(params: &ConstructionParams) -> bool {
    let ring = params.ring();
    let [g1, g2, g3, g4] = *params.gamma();
    let sq = [g1, g2, g3, g4]
        .iter()
        .fold(ring.zero(), |acc, g| acc.checked_add(g.square()).expect("same ring"));
    if !sq.is_one() {
        return false;
    }
    let d1 = params.v1().coeff_sum();
    let d2 = params.v2().coeff_sum();
    let m = |a: RingElem, b: RingElem| a.checked_mul(b).expect("same ring");
    let border1 = m(g1, g2)
        .checked_add(m(g2, d1))
        .and_then(|x| x.checked_add(m(g3, g4)))
        .and_then(|x| x.checked_add(m(g4, d2)))
        .expect("same ring");
    if !border1.is_zero() {
        return false;
    }
    let border2 = m(g1, g4)
        .checked_add(m(g2, d2))
        .and_then(|x| x.checked_add(m(g3, g2)))
        .and_then(|x| x.checked_add(m(g4, d1)))
        .expect("same ring");
    if !border2.is_zero() {
        return false;
    }
    if matches!(corollary_screen(params), ScreenVerdict::CannotBeSelfDual(_)) {
        return false;
    }
    let rep = sdcodes::construct::check_conditions(params);
    rep.commuting && rep.products_left && rep.products_right
}

struct ChunkOutcome {
    scanned: u64,
    survivors: u64,
    self_dual: u64,
    matched: u64,
    hits: Vec<(u64, ConstructionParams, WeightProfile)>,
}

fn fingerprint(profile: &WeightProfile, k: usize) -> String {
    let d = profile.d;
    let a_d = profile.count(d).unwrap_or(0);
    let a_d2 = profile.count(d + 2).unwrap_or(0);
    let fam = match &profile.family {
        Some(f) => {
            let mut s = f.family.to_string();
            if let Some(a) = f.alpha {
                s.push_str(&format!(" a={a}"));
            }
            if let Some(b) = f.beta {
                s.push_str(&format!(" b={b}"));
            }
            if let Some(g) = f.gamma {
                s.push_str(&format!(" g={g}"));
            }
            s
        }
        None => "-".into(),
    };
    format!("[{},{},{}] A{}={} A{}={} {}", profile.n, k, d, d, a_d, d + 2, a_d2, fam)
}

/// Run the search; the ledger is sorted and deduplicated by fingerprint.
pub fn run(config: &SearchConfig, chain: ChainChoice) -> Result<SearchLedger> {
    let space = build_space(config)?;
    let n_binary = (4 * space.group.order() + 4) * space.ring.binary_expansion();
    let note = "fingerprint identity is (n,k,d,A_d,A_{d+2},family); it does not imply code \
                equivalence, and one representative per fingerprint is kept"
        .to_string();

    // a target above the applicable bound cannot be met
    let bound = rains_bound(n_binary, true).max(rains_bound(n_binary, false));
    if config.target.d > bound {
        return Ok(SearchLedger {
            config: config.clone(),
            mode: "short-circuit".into(),
            scanned: 0,
            prefilter_survivors: 0,
            self_dual: 0,
            matched: 0,
            entries: Vec::new(),
            resume_token: None,
            note: format!(
                "target d = {} exceeds the length-{n_binary} bound {bound}; empty ledger",
                config.target.d
            ),
        });
    }

    let (count, resume_token) = if space.exhaustive {
        let total = space.total.expect("exhaustive space is finite");
        let remaining = total.saturating_sub(config.start);
        let count = remaining.min(config.budget);
        let next = config.start + count;
        (count, (next < total).then_some(next))
    } else {
        (config.budget, Some(config.start + config.budget))
    };

    const CHUNK: u64 = 2048;
    let chunk_count = count.div_ceil(CHUNK);
    let outcomes: Vec<ChunkOutcome> = (0..chunk_count)
        .into_par_iter()
        .map(|ci| {
            let lo = config.start + ci * CHUNK;
            let hi = (lo + CHUNK).min(config.start + count);
            let mut out = ChunkOutcome {
                scanned: 0,
                survivors: 0,
                self_dual: 0,
                matched: 0,
                hits: Vec::new(),
            };
            for idx in lo..hi {
                out.scanned += 1;
                let params = space.candidate(idx, config.seed);
                if !necessary_conditions_hold(&params) {
                    continue;
                }
                out.survivors += 1;
                let generator = build_generator(&params);
                if !is_self_dual_over_ring(&generator).expect("built matrix has [I|R] shape") {
                    continue;
                }
                out.self_dual += 1;
                let code = binary_image(&generator, &chain.chain_for(space.ring))
                    .expect("rings match the chain");
                if !code.is_self_dual() {
                    continue;
                }
                let Ok(profile) = classify(&code) else {
                    continue;
                };
                if config.target.matches(&profile) {
                    out.matched += 1;
                    out.hits.push((idx, params, profile));
                }
            }
            out
        })
        .collect();

    let mut scanned = 0;
    let mut survivors = 0;
    let mut self_dual = 0;
    let mut matched = 0;
    let mut ledger: BTreeMap<String, LedgerEntry> = BTreeMap::new();
    for chunk in outcomes {
        scanned += chunk.scanned;
        survivors += chunk.survivors;
        self_dual += chunk.self_dual;
        matched += chunk.matched;
        for (idx, params, profile) in chunk.hits {
            let fp = fingerprint(&profile, 2 * space.group.order() + 2);
            ledger
                .entry(fp.clone())
                .and_modify(|e| e.hits += 1)
                .or_insert_with(|| LedgerEntry {
                    fingerprint: fp,
                    hits: 1,
                    candidate_index: idx,
                    group: params.group().literal(),
                    ring: params.ring().to_string(),
                    gamma: emit_vector(params.gamma()),
                    v1: emit_vector(&params.v1().coeffs()),
                    v2: emit_vector(&params.v2().coeffs()),
                    profile,
                });
        }
    }

    Ok(SearchLedger {
        config: config.clone(),
        mode: if space.exhaustive { "exhaustive" } else { "random" }.into(),
        scanned,
        prefilter_survivors: survivors,
        self_dual,
        matched,
        entries: ledger.into_values().collect(),
        resume_token,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_short_circuit_gives_empty_ledger() {
        let config = SearchConfig {
            group: "C3".into(),
            ring: "F4".into(),
            gamma_domain: GammaDomain::Exhaustive,
            target: TargetSpec { d: 20, family: None, alpha: None, beta: None, gamma: None },
            seed: 7,
            budget: 1000,
            start: 0,
        };
        let ledger = run(&config, ChainChoice::Canonical).unwrap();
        assert_eq!(ledger.scanned, 0);
        assert!(ledger.entries.is_empty());
    }

    #[test]
    fn necessary_conditions_are_necessary_on_a_sample() {
        // every self-dual build must pass the prefilter
        let space = build_space(&SearchConfig {
            group: "C3".into(),
            ring: "F2".into(),
            gamma_domain: GammaDomain::Exhaustive,
            target: TargetSpec { d: 4, family: None, alpha: None, beta: None, gamma: None },
            seed: 0,
            budget: 1 << 20,
            start: 0,
        })
        .unwrap();
        let total = space.total.unwrap();
        for idx in 0..total {
            let params = space.candidate(idx, 0);
            let sd = is_self_dual_over_ring(&build_generator(&params)).unwrap();
            let pre = necessary_conditions_hold(&params);
            if sd {
                assert!(pre, "prefilter rejected a self-dual candidate: {params:?}");
            }
            if pre {
                assert!(sd, "prefilter passed a non-self-dual candidate: {params:?}");
            }
        }
    }

    #[test]
    fn fixed_seed_is_deterministic() {
        let config = SearchConfig {
            group: "C7".into(),
            ring: "F2".into(),
            gamma_domain: GammaDomain::Fixed("0,0,0,1".into()),
            target: TargetSpec { d: 8, family: None, alpha: None, beta: None, gamma: None },
            seed: 42,
            budget: 3000,
            start: 0,
        };
        let a = run(&config, ChainChoice::Canonical).unwrap();
        let b = run(&config, ChainChoice::Canonical).unwrap();
        assert_eq!(a.scanned, b.scanned);
        assert_eq!(a.matched, b.matched);
        let fa: Vec<&String> = a.entries.iter().map(|e| &e.fingerprint).collect();
        let fb: Vec<&String> = b.entries.iter().map(|e| &e.fingerprint).collect();
        assert_eq!(fa, fb);
    }
}
