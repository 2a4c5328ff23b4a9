//! Parsers for command-line value syntax: Coxeter type names, rationals,
//! integer lists, and braid words.

use anyhow::{anyhow, bail, Context, Result};
use braidwalk_core::limits::CoxeterType;
use braidwalk_core::{BigInt, BigRational};

/// Parses a Coxeter type name: `A5`, `B3`, `D4`, `E6`, `E7`, `E8`, `F4`,
/// `G2`, `H3`, `H4`, or `I2(m)`. Products join factors with `x`, e.g.
/// `B3xA1`.
pub fn parse_coxeter_types(text: &str) -> Result<Vec<CoxeterType>> {
    text.split('x')
        .map(|tok| parse_one_type(tok.trim()))
        .collect()
}

fn parse_one_type(tok: &str) -> Result<CoxeterType> {
    if tok.is_empty() {
        bail!("empty Coxeter type name");
    }
    if let Some(inner) = tok.strip_prefix("I2(").and_then(|rest| rest.strip_suffix(')')) {
        let m: u64 = inner
            .parse()
            .with_context(|| format!("bad I2 parameter in {tok:?}"))?;
        return Ok(CoxeterType::I2(m));
    }
    let (letter, rank_text) = tok.split_at(1);
    let rank: u32 = rank_text
        .parse()
        .with_context(|| format!("bad rank in Coxeter type {tok:?}"))?;
    match (letter, rank) {
        ("A", n) => Ok(CoxeterType::A(n)),
        ("B", n) | ("C", n) => Ok(CoxeterType::B(n)),
        ("D", n) => Ok(CoxeterType::D(n)),
        ("E", 6) => Ok(CoxeterType::E6),
        ("E", 7) => Ok(CoxeterType::E7),
        ("E", 8) => Ok(CoxeterType::E8),
        ("F", 4) => Ok(CoxeterType::F4),
        ("G", 2) => Ok(CoxeterType::G2),
        ("H", 3) => Ok(CoxeterType::H3),
        ("H", 4) => Ok(CoxeterType::H4),
        _ => Err(anyhow!("unknown Coxeter type {tok:?}")),
    }
}

/// Parses an exact rational: `p/q`, an integer, or a plain decimal such as
/// `0.25` (converted exactly).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i128 = num.trim().parse().context("bad numerator")?;
        let den: i128 = den.trim().parse().context("bad denominator")?;
        if den == 0 {
            bail!("zero denominator");
        }
        return Ok(BigRational::new(BigInt::from(num), BigInt::from(den)));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let digits = format!("{whole}{frac}");
        let num: i128 = digits.parse().context("bad decimal")?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(BigRational::new(BigInt::from(num), den));
    }
    let num: i128 = text.parse().context("bad integer")?;
    Ok(BigRational::from_integer(BigInt::from(num)))
}

/// Parses a comma-separated list of unsigned integers, e.g. `2,4,8`.
pub fn parse_u64_list(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .with_context(|| format!("bad integer {tok:?}"))
        })
        .collect()
}

/// Parses a braid (or Coxeter) word in list syntax: `[1,-2,4]`. A bare
/// comma list without brackets is accepted too.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .unwrap_or(text.trim());
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .with_context(|| format!("bad word letter {tok:?}"))
        })
        .collect()
}

/// Parses a list of braid words: `[[1,-2],[1,1],[1]]`.
pub fn parse_word_list(text: &str) -> Result<Vec<Vec<i64>>> {
    let value: serde_json::Value =
        serde_json::from_str(text).context("word list must be a JSON array of arrays")?;
    let outer = value
        .as_array()
        .ok_or_else(|| anyhow!("word list must be a JSON array"))?;
    outer
        .iter()
        .map(|word| {
            word.as_array()
                .ok_or_else(|| anyhow!("each word must be an array of integers"))?
                .iter()
                .map(|v| v.as_i64().ok_or_else(|| anyhow!("letters must be integers")))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidwalk_core::ratio;

    #[test]
    fn coxeter_type_names() {
        assert_eq!(parse_coxeter_types("B3").unwrap(), vec![CoxeterType::B(3)]);
        assert_eq!(
            parse_coxeter_types("I2(7)").unwrap(),
            vec![CoxeterType::I2(7)]
        );
        assert_eq!(
            parse_coxeter_types("B3xA1").unwrap(),
            vec![CoxeterType::B(3), CoxeterType::A(1)]
        );
        assert_eq!(parse_coxeter_types("E8").unwrap(), vec![CoxeterType::E8]);
        // C is the same degree table row as B.
        assert_eq!(parse_coxeter_types("C3").unwrap(), vec![CoxeterType::B(3)]);
        assert!(parse_coxeter_types("Q5").is_err());
        assert!(parse_coxeter_types("E9").is_err());
        assert!(parse_coxeter_types("").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/5").unwrap(), ratio(1, 5));
        assert_eq!(parse_rational("3").unwrap(), ratio(3, 1));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-2/4").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn int_lists() {
        assert_eq!(parse_int_list("[1,-2,4]").unwrap(), vec![1, -2, 4]);
        assert_eq!(parse_int_list("1, 2").unwrap(), vec![1, 2]);
        assert_eq!(parse_int_list("[]").unwrap(), Vec::<i64>::new());
        assert_eq!(
            parse_word_list("[[1,-2],[1,1],[1]]").unwrap(),
            vec![vec![1, -2], vec![1, 1], vec![1]]
        );
        assert!(parse_word_list("[1,2]").is_err());
    }
}
