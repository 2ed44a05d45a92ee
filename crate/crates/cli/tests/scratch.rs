// temporary exploration of table-2 row 3; deleted before release

use sdcodes::bincode::{classify, Family};
use sdcodes::construct::{build_generator, is_self_dual_over_ring};
use sdcodes::gray::{binary_image, GrayChain};
use sdcodes::rings::RingId;
use sdcodes_cli::pipeline::parse_params;
use std::collections::BTreeMap;

fn beta_of(symbols: &[String]) -> Option<i64> {
    let gamma = symbols[0..4].join(",");
    let v1 = symbols[4..7].join(",");
    let v2 = symbols[7..10].join(",");
    let params = parse_params("C3", "F4U", &gamma, &v1, &v2).ok()?;
    let gen = build_generator(&params);
    if !is_self_dual_over_ring(&gen).unwrap() {
        return None;
    }
    let code = binary_image(&gen, &GrayChain::canonical(RingId::F4U)).unwrap();
    if !code.is_self_dual() {
        return None;
    }
    let p = classify(&code).ok()?;
    let fam = p.family.as_ref()?;
    if p.d == 12 && fam.family == Family::W64_2 {
        fam.beta
    } else {
        None
    }
}

#[test]
fn probe_row3_three_fixes() {
    let hex: Vec<String> = (0..16u8).map(|b| format!("{b:X}")).collect();
    let printed: Vec<String> =
        ["0", "A", "4", "7", "A", "2", "9", "9", "6", "1"].map(String::from).to_vec();
    let mut by_beta: BTreeMap<i64, Vec<String>> = BTreeMap::new();
    // restrict to coefficient-sum-consistent candidates: one change in v1
    // restoring delta1 = 0, one in v2 restoring delta2 = 4, one anywhere in
    // the v's preserving the sums (pairwise same-xor changes)
    for i in 4..7 {
        for j in 7..10 {
            for hi in &hex {
                for hj in &hex {
                    if *hi == printed[i] || *hj == printed[j] {
                        continue;
                    }
                    let mut cand = printed.clone();
                    cand[i] = hi.clone();
                    cand[j] = hj.clone();
                    // third change: none (covered), or one more symbol anywhere
                    if let Some(beta) = beta_of(&cand) {
                        by_beta.entry(beta).or_default().push(format!(
                            "2v-fix pos{i}->{hi} pos{j}->{hj}"
                        ));
                    }
                }
            }
        }
    }
    println!("two-v-symbol fixes by beta:");
    for (beta, fixes) in &by_beta {
        println!("  beta={beta}: {} fixes, e.g. {}", fixes.len(), fixes[0]);
    }

    // rearrangement probe: keep the printed multiset of v symbols, try all
    // ordered splits into v1, v2
    let symbols = ["A", "2", "9", "9", "6", "1"];
    let mut perm_hits: BTreeMap<i64, usize> = BTreeMap::new();
    let mut idx = [0usize; 6];
    for p0 in 0..6 {
        for p1 in 0..6 {
            for p2 in 0..6 {
                for p3 in 0..6 {
                    for p4 in 0..6 {
                        for p5 in 0..6 {
                            idx = [p0, p1, p2, p3, p4, p5];
                            let mut used = [false; 6];
                            let mut ok = true;
                            for &i in &idx {
                                if used[i] {
                                    ok = false;
                                    break;
                                }
                                used[i] = true;
                            }
                            if !ok {
                                continue;
                            }
                            let cand: Vec<String> = ["0", "A", "4", "7"]
                                .iter()
                                .map(|s| s.to_string())
                                .chain(idx.iter().map(|&i| symbols[i].to_string()))
                                .collect();
                            if let Some(beta) = beta_of(&cand) {
                                *perm_hits.entry(beta).or_default() += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    println!("v-symbol rearrangements by beta: {perm_hits:?}");
}
