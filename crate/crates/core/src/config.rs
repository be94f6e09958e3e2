//! Flat key-value configuration files: one `key = value` per line,
//! `#` starts a comment.
//!
//! Hamiltonian keys: `eps0, eps1, eps01, U, J, K` (missing keys default to
//! zero except `eps1`, which defaults to 1, the energy unit). Optional
//! initial-state keys: `r1, r2, r3, theta1, theta2, theta3`.

use crate::dynamics::EnergyDistribution;
use crate::error::{DimerError, Result};
use crate::hamiltonian::HamiltonianParams;
use std::collections::BTreeMap;

const HAMILTONIAN_KEYS: [&str; 6] = ["eps0", "eps1", "eps01", "U", "J", "K"];
const STATE_KEYS: [&str; 6] = ["r1", "r2", "r3", "theta1", "theta2", "theta3"];

/// Parses `key = value` lines into a map, rejecting unknown keys.
pub fn parse_key_values(text: &str) -> Result<BTreeMap<String, f64>> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            DimerError::Config(format!("line {}: expected `key = value`", lineno + 1))
        })?;
        let key = key.trim();
        if !HAMILTONIAN_KEYS.contains(&key) && !STATE_KEYS.contains(&key) {
            return Err(DimerError::Config(format!(
                "line {}: unknown key `{key}`",
                lineno + 1
            )));
        }
        let value: f64 = value.trim().parse().map_err(|_| {
            DimerError::Config(format!(
                "line {}: cannot parse `{}` as a number",
                lineno + 1,
                value.trim()
            ))
        })?;
        if map.insert(key.to_string(), value).is_some() {
            return Err(DimerError::Config(format!(
                "line {}: duplicate key `{key}`",
                lineno + 1
            )));
        }
    }
    Ok(map)
}

/// Hamiltonian parameters from a parsed config map.
pub fn params_from_map(map: &BTreeMap<String, f64>) -> HamiltonianParams {
    let get = |k: &str, default: f64| map.get(k).copied().unwrap_or(default);
    HamiltonianParams {
        eps0: get("eps0", 0.0),
        eps1: get("eps1", 1.0),
        eps01: get("eps01", 0.0),
        u: get("U", 0.0),
        j: get("J", 0.0),
        k: get("K", 0.0),
    }
}

/// Optional initial-state distribution from a parsed config map; present
/// only when all of r1, r2, r3 are given.
pub fn distribution_from_map(map: &BTreeMap<String, f64>) -> Result<Option<EnergyDistribution>> {
    let r: Vec<f64> = ["r1", "r2", "r3"]
        .iter()
        .filter_map(|k| map.get(*k).copied())
        .collect();
    if r.is_empty() {
        return Ok(None);
    }
    if r.len() != 3 {
        return Err(DimerError::Config(
            "r1, r2, r3 must be given together".into(),
        ));
    }
    let theta = [
        map.get("theta1").copied().unwrap_or(0.0),
        map.get("theta2").copied().unwrap_or(0.0),
        map.get("theta3").copied().unwrap_or(0.0),
    ];
    EnergyDistribution::new([r[0], r[1], r[2]], theta).map(Some)
}

/// Reads and parses a config file.
pub fn load_config(path: &std::path::Path) -> Result<BTreeMap<String, f64>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| DimerError::Config(format!("{}: {e}", path.display())))?;
    parse_key_values(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_config() {
        let map =
            parse_key_values("eps1 = 1.0\nJ = 2.5 # tunneling\n\n# comment\nK = 0.1\n").unwrap();
        let p = params_from_map(&map);
        assert_eq!(p.eps1, 1.0);
        assert_eq!(p.j, 2.5);
        assert_eq!(p.k, 0.1);
        assert_eq!(p.u, 0.0);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        assert!(parse_key_values("foo = 1").is_err());
        assert!(parse_key_values("J 1.0").is_err());
        assert!(parse_key_values("J = abc").is_err());
        assert!(parse_key_values("J = 1\nJ = 2").is_err());
    }

    #[test]
    fn distribution_keys() {
        let map = parse_key_values("r1 = 0.5\nr2 = 0\nr3 = 0.5\ntheta3 = 3.14").unwrap();
        let d = distribution_from_map(&map).unwrap().unwrap();
        assert_eq!(d.r(), [0.5, 0.0, 0.5]);
        assert!((d.theta()[2] - 3.14).abs() < 1e-15);
        let map = parse_key_values("J = 1").unwrap();
        assert!(distribution_from_map(&map).unwrap().is_none());
        let map = parse_key_values("r1 = 0.5\nr2 = 0.5").unwrap();
        assert!(distribution_from_map(&map).is_err());
    }
}
