//! End-to-end flows: construct -> check -> Gray map -> classify, the
//! length-68 extension flow and the neighbor flow.

use anyhow::{anyhow, bail, Context, Result};
use sdcodes::bincode::{classify, BinaryCode, WeightProfile};
use sdcodes::construct::{
    build_generator, check_conditions, corollary_screen, is_self_dual_over_ring,
    ConditionReport, ConstructionParams, ScreenVerdict,
};
use sdcodes::derive::{extend, neighbor, ExtensionSpec, NeighborCoords, NeighborSpec};
use sdcodes::gray::{binary_image, stage_image_generator, GrayChain, GrayStage};
use sdcodes::groupring::{GroupRingElem, GroupSpec, RingMatrix};
use sdcodes::rings::{parse_vector, RingElem, RingId};

/// Which Gray route to take down to binary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChainChoice {
    #[default]
    Canonical,
    /// The alternate F4+uF4 route psi_f4 . phi_f4u.
    AlternateF4U,
}

impl ChainChoice {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(ChainChoice::Canonical),
            "alternate-f4u" => Ok(ChainChoice::AlternateF4U),
            _ => bail!("unknown gray chain `{s}` (canonical | alternate-f4u)"),
        }
    }

    pub fn chain_for(self, ring: RingId) -> GrayChain {
        match (self, ring) {
            (ChainChoice::AlternateF4U, RingId::F4U) => GrayChain::alternate_f4u(),
            _ => GrayChain::canonical(ring),
        }
    }
}

/// Everything the construction flow computes for one candidate.
pub struct ConstructOutcome {
    pub params: ConstructionParams,
    pub conditions: ConditionReport,
    pub screen: ScreenVerdict,
    pub ring_self_dual: bool,
    pub code: BinaryCode,
    pub profile: Option<WeightProfile>,
}

/// Parse the textual form of construction parameters.
pub fn parse_params(
    group: &str,
    ring: &str,
    gamma: &str,
    v1: &str,
    v2: &str,
) -> Result<ConstructionParams> {
    let group = GroupSpec::parse(group).with_context(|| format!("group literal `{group}`"))?;
    let ring: RingId = ring.parse()?;
    let g = parse_vector(gamma, ring).with_context(|| format!("gamma quadruple `{gamma}`"))?;
    if g.len() != 4 {
        bail!("expected 4 gamma entries, got {}", g.len());
    }
    let v1 = GroupRingElem::parse(group.clone(), ring, v1).context("v1")?;
    let v2 = GroupRingElem::parse(group.clone(), ring, v2).context("v2")?;
    Ok(ConstructionParams::new(group, ring, [g[0], g[1], g[2], g[3]], v1, v2)?)
}

/// Join the two printed border pairs into one gamma quadruple.
pub fn join_gamma_pairs(gamma12: &str, gamma34: &str) -> String {
    format!("{},{}", gamma12.trim(), gamma34.trim())
}

/// Parse one manifest row in the published column layout:
/// `group ring gamma1,gamma2 v1 gamma3,gamma4 v2`.
pub fn parse_manifest_row(line: &str) -> Result<ConstructionParams> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 6 {
        bail!(
            "expected 6 whitespace-separated fields `group ring g1,g2 v1 g3,g4 v2`, got {}",
            fields.len()
        );
    }
    parse_params(
        fields[0],
        fields[1],
        &join_gamma_pairs(fields[2], fields[4]),
        fields[3],
        fields[5],
    )
}

/// Run the full construction flow. Non-self-dual candidates are flagged,
/// not rejected: the binary image is still produced, but no profile is
/// computed for it.
pub fn run_construction(params: ConstructionParams, chain: ChainChoice) -> Result<ConstructOutcome> {
    let conditions = check_conditions(&params);
    let screen = corollary_screen(&params);
    let generator = build_generator(&params);
    let ring_self_dual = is_self_dual_over_ring(&generator)?;
    let code = binary_image(&generator, &chain.chain_for(params.ring()))?;
    let profile = if ring_self_dual && code.is_self_dual() {
        Some(classify(&code)?)
    } else {
        None
    };
    Ok(ConstructOutcome { params, conditions, screen, ring_self_dual, code, profile })
}

/// The F2+uF2 generator of the psi image of an F4+uF4 construction.
pub fn psi_image_generator(params: &ConstructionParams) -> Result<RingMatrix> {
    if params.ring() != RingId::F4U {
        bail!("psi image requires an F4+uF4 construction, got {}", params.ring());
    }
    let generator = build_generator(params);
    if !is_self_dual_over_ring(&generator)? {
        bail!("base construction is not self-dual over {}", params.ring());
    }
    Ok(stage_image_generator(&generator, GrayStage::PsiF4U)?)
}

/// Extension flow: extend a self-dual F2/F2+uF2 generator by (c, X) and
/// take the binary image of the result.
pub fn extend_to_binary(base: RingMatrix, c: &str, x: &str) -> Result<(BinaryCode, WeightProfile)> {
    let ring = base.ring();
    let c = {
        let v = parse_vector(c, ring).with_context(|| format!("unit c `{c}`"))?;
        if v.len() != 1 {
            bail!("c must be a single ring element");
        }
        v[0]
    };
    let x: Vec<RingElem> = parse_vector(x, ring).context("extension vector X")?;
    let extended = extend(&ExtensionSpec { base, c, x })?;
    let code = binary_image(&extended, &GrayChain::canonical(ring))?;
    if !code.is_self_dual() {
        bail!("extension produced a non-self-dual binary image");
    }
    let profile = classify(&code)?;
    Ok((code, profile))
}

/// Neighbor flow: apply a (possibly zero-prefixed) neighbor vector to a
/// self-dual binary code under the chosen coordinate interpretation.
pub fn neighbor_to_binary(
    base: &BinaryCode,
    suffix: &str,
    zero_prefix: usize,
    coords: NeighborCoords,
) -> Result<(BinaryCode, WeightProfile)> {
    let mut x = vec![false; zero_prefix];
    for (i, ch) in suffix.trim().chars().enumerate() {
        match ch {
            '0' => x.push(false),
            '1' => x.push(true),
            _ => bail!("invalid bit `{ch}` at position {i} of the neighbor vector"),
        }
    }
    if x.len() != base.n() {
        bail!(
            "neighbor vector length {} (prefix {zero_prefix} + suffix {}) does not match n = {}",
            x.len(),
            x.len() - zero_prefix,
            base.n()
        );
    }
    let code = neighbor(&NeighborSpec { base: base.clone(), x, coords })?;
    let profile = classify(&code)?;
    Ok((code, profile))
}

/// Render a profile's classification for reports.
pub fn describe_profile(code: &BinaryCode, profile: &WeightProfile) -> String {
    let label = if code.is_type_ii() { "II" } else { "I" };
    let mut s = format!("[{},{},{}]_{label}", profile.n, code.k(), profile.d);
    if let Some(f) = &profile.family {
        s.push_str(&format!(" {}", f.family));
        let mut parts = Vec::new();
        if let Some(a) = f.alpha {
            parts.push(format!("alpha={a}"));
        }
        if let Some(b) = f.beta {
            parts.push(format!("beta={b}"));
        }
        if let Some(g) = f.gamma {
            parts.push(format!("gamma={g}"));
        }
        if !parts.is_empty() {
            s.push_str(&format!(" ({})", parts.join(", ")));
        }
    }
    s
}

/// Build the construction parameters of a bundled table row.
pub fn row_params(row: &crate::tables::ConstructRow) -> Result<ConstructionParams> {
    parse_params(
        row.group,
        row.ring,
        &join_gamma_pairs(row.gamma12, row.gamma34),
        row.v1,
        row.v2,
    )
}

/// Resolve a table-2 row into its construction parameters.
pub fn table2_row_params(base_row: usize) -> Result<ConstructionParams> {
    let spec = crate::tables::table(crate::tables::TableId::T2);
    let rows = match spec.rows {
        crate::tables::TableRows::Construct(r) => r,
        _ => unreachable!("table 2 is a construction table"),
    };
    let row = rows
        .get(base_row.checked_sub(1).ok_or_else(|| anyhow!("rows are 1-based"))?)
        .ok_or_else(|| anyhow!("table 2 has no row {base_row}"))?;
    row_params(row)
}
