use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::ga::GAConfig;

fn invalid(field: &str, reason: impl Into<String>) -> Error {
    Error::InvalidConfig { field: field.to_string(), reason: reason.into() }
}

fn num<T: std::str::FromStr>(field: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| invalid(field, format!("cannot parse `{v}`")))
}

/// Angles accept plain radians or a multiple of pi such as `0.1pi`.
fn angle(field: &str, v: &str) -> Result<f64> {
    match v.strip_suffix("pi") {
        Some("") => Ok(PI),
        Some(k) => Ok(num::<f64>(field, k)? * PI),
        None => num(field, v),
    }
}

/// Parse flat `key = value` lines into a config layered over the defaults.
/// Blank lines and `#` comments are ignored; unknown keys and bad values are
/// reported by field name.
pub fn parse_config(text: &str) -> Result<GAConfig> {
    parse_config_keys(text).map(|(c, _)| c)
}

/// [`parse_config`] also returning the keys the text set, in order.
pub fn parse_config_keys(text: &str) -> Result<(GAConfig, Vec<String>)> {
    let mut c = GAConfig::default();
    let mut keys = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| invalid(&format!("line {}", lineno + 1), "expected key = value"))?;
        let (k, v) = (k.trim(), v.trim());
        match k {
            "population_size" => c.population_size = num(k, v)?,
            "generations" => c.generations = num(k, v)?,
            "cutoff" => c.cutoff = num(k, v)?,
            "stop_fitness" => c.stop_fitness = num(k, v)?,
            "elite_count" => c.elite_count = num(k, v)?,
            "tournament_size" => c.tournament_size = num(k, v)?,
            "crossover_rate" => c.crossover_rate = num(k, v)?,
            "mutation_rate" => c.mutation_rate = num(k, v)?,
            "angle_sigma" => c.angle_sigma = angle(k, v)?,
            "delay_sigma" => c.delay_sigma = num(k, v)?,
            "mutation_decades" => c.mutation_decades = num(k, v)?,
            "crusher_flip_rate" => c.crusher_flip_rate = num(k, v)?,
            "d_max" => c.d_max = if v == "none" { None } else { Some(num(k, v)?) },
            "rng_seed" => c.rng_seed = num(k, v)?,
            "restarts" => c.restarts = num(k, v)?,
            "initial_genes" => c.initial_genes = if v == "none" { None } else { Some(num(k, v)?) },
            "max_genes" => c.max_genes = num(k, v)?,
            "refine_evaluations" => c.refine_evaluations = num(k, v)?,
            "polish_generations" => c.polish_generations = num(k, v)?,
            _ => return Err(invalid(k, "unknown key")),
        }
        keys.push(k.to_string());
    }
    c.validate()?;
    Ok((c, keys))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layered_over_defaults() {
        let c = parse_config("# small run\npopulation_size = 40\nangle_sigma = 0.05pi\n\nd_max = 0.2 # seconds\n").unwrap();
        assert_eq!(c.population_size, 40);
        assert!((c.angle_sigma - 0.05 * PI).abs() < 1e-15);
        assert_eq!(c.d_max, Some(0.2));
        assert_eq!(c.generations, GAConfig::default().generations);
    }

    #[test]
    fn names_bad_field() {
        for (text, field) in [("mutation_rate = 2", "mutation_rate"), ("generations = many", "generations"), ("colour = red", "colour")] {
            match parse_config(text) {
                Err(Error::InvalidConfig { field: f, .. }) => assert_eq!(f, field),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
