//! Subset selectors: turn the `--subset` argument into a family of
//! submodule indices and check it against the requested graph kind.

use specgraph_core::{GraphKind, Lattice, Submodule};

use crate::CliError;

/// Resolve one token of an explicit selector: either a decimal
/// enumeration index or a generator alias `g=c1.c2+d1.d2` listing one
/// coordinate tuple per generator.
fn resolve_token(lat: &Lattice, token: &str) -> Result<u32, CliError> {
    let bad = |detail: &str| CliError::BadSubsetToken {
        token: token.to_string(),
        detail: detail.to_string(),
    };
    if let Some(gens) = token.strip_prefix("g=") {
        let m = lat.module();
        let factors = m.invariant_factors();
        let mut elems = Vec::new();
        for tuple in gens.split('+') {
            let coords: Vec<u64> = if tuple.is_empty() {
                Vec::new()
            } else {
                tuple
                    .split('.')
                    .map(|c| c.parse::<u64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad("coordinates must be decimal integers"))?
            };
            if coords.len() != factors.len() {
                return Err(bad(&format!(
                    "generator {:?} has {} coordinates, the module has rank {}",
                    tuple,
                    coords.len(),
                    factors.len()
                )));
            }
            for (c, d) in coords.iter().zip(factors) {
                if c >= d {
                    return Err(bad(&format!(
                        "coordinate {c} is not below the invariant factor {d}"
                    )));
                }
            }
            elems.push(m.encode(&coords));
        }
        let span = Submodule::span(m, &elems);
        Ok(lat.index_of(&span).expect("span is in the full lattice"))
    } else {
        let idx: u32 = token
            .parse()
            .map_err(|_| bad("expected a submodule index or a g= generator alias"))?;
        if (idx as usize) >= lat.len() {
            return Err(CliError::IndexOutOfRange { index: idx, count: lat.len() });
        }
        Ok(idx)
    }
}

/// Resolve the whole selector. `max` and `spec` name the maximal and
/// prime spectra; anything else is a comma-separated list of tokens.
/// The annihilating graph ignores the subset entirely.
pub fn resolve(lat: &Lattice, raw: &str, kind: GraphKind) -> Result<Vec<u32>, CliError> {
    if kind == GraphKind::Annihilating {
        return Ok(Vec::new());
    }
    let raw = raw.trim();
    let mut t: Vec<u32> = match raw {
        "max" => lat.maximal_indices().to_vec(),
        "spec" => lat.prime_indices().to_vec(),
        _ => raw
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| resolve_token(lat, s.trim()))
            .collect::<Result<_, _>>()?,
    };
    t.sort_unstable();
    t.dedup();
    if t.is_empty() {
        let detail = match raw {
            "max" => "the module has no maximal submodules".to_string(),
            "spec" => "the module has no prime submodules".to_string(),
            _ => "no indices were given".to_string(),
        };
        return Err(CliError::EmptySubset { detail });
    }
    let (family, name) = match kind {
        GraphKind::ZariskiSpec => (lat.prime_indices(), "prime"),
        _ => (lat.maximal_indices(), "maximal"),
    };
    for &q in &t {
        if !family.contains(&q) {
            return Err(CliError::NotInFamily { index: q, family: name, kind: kind.name() });
        }
    }
    Ok(t)
}
