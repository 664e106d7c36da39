//! The `apply` subcommand: run a single operator on series read from a
//! JSON file and print the result in the same wire format.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use dsl_core::{
    delta_w, ihara_bracket, lie_theta, push, q_to_string, Alphabet, Series, WElement, WTensor,
};

use crate::{Cli, Failure, OutFormat};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Map {
    /// Cyclic rotation of coefficients.
    Push,
    /// The involution on inert Lie elements.
    Theta,
    /// The Ihara bracket of a two-element array.
    Ihara,
    /// The harmonic coproduct of a W-element.
    #[value(name = "delta_w", alias = "delta-w")]
    DeltaW,
}

/// Wire shape for a coproduct value: tensor basis keys are the two word
/// keys joined by `|`.
#[derive(Serialize)]
struct TensorOutput {
    alphabet: Vec<String>,
    max_degree: usize,
    terms: BTreeMap<String, String>,
}

impl TensorOutput {
    fn from_tensor(t: &WTensor) -> Self {
        TensorOutput {
            alphabet: t.alphabet().names().to_vec(),
            max_degree: t.max_degree(),
            terms: t
                .terms()
                .map(|((l, r), c)| (format!("{}|{}", l.to_key(), r.to_key()), q_to_string(c)))
                .collect(),
        }
    }
}

pub fn run(map: Map, input: &Path, cli: &Cli) -> Result<(), Failure> {
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", input.display())))?;
    match map {
        Map::Push => {
            let s = parse_series(&text, input)?;
            emit_series(&push(&s), cli);
            Ok(())
        }
        Map::Theta => {
            let s = parse_series(&text, input)?;
            let image = lie_theta(&s).map_err(|e| Failure::Check(e.to_string()))?;
            emit_series(&image, cli);
            Ok(())
        }
        Map::Ihara => {
            let pair: Vec<Series> = serde_json::from_str(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
            let [a, b]: [Series; 2] = pair.try_into().map_err(|v: Vec<Series>| {
                Failure::Input(format!("expected an array of 2 series, got {}", v.len()))
            })?;
            for s in [&a, &b] {
                require_e01(s, input)?;
            }
            emit_series(&ihara_bracket(&a, &b), cli);
            Ok(())
        }
        Map::DeltaW => {
            let s = parse_series(&text, input)?;
            let w = WElement::new(s).map_err(|e| Failure::Check(e.to_string()))?;
            let tensor = delta_w(&w);
            match cli.out {
                OutFormat::Json => {
                    let out = TensorOutput::from_tensor(&tensor);
                    println!("{}", serde_json::to_string(&out).expect("tensor serializes"));
                }
                OutFormat::Table => {
                    for ((l, r), c) in tensor.terms() {
                        println!("{}|{}\t{}", l.to_key(), r.to_key(), q_to_string(c));
                    }
                }
            }
            Ok(())
        }
    }
}

fn parse_series(text: &str, input: &Path) -> Result<Series, Failure> {
    let s: Series = serde_json::from_str(text)
        .map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
    require_e01(&s, input)?;
    Ok(s)
}

fn require_e01(s: &Series, input: &Path) -> Result<(), Failure> {
    if *s.alphabet() == Alphabet::e01() {
        Ok(())
    } else {
        Err(Failure::Input(format!(
            "{}: expected the two-letter alphabet [\"e0\", \"e1\"]",
            input.display()
        )))
    }
}

fn emit_series(s: &Series, cli: &Cli) {
    match cli.out {
        OutFormat::Json => {
            println!("{}", serde_json::to_string(s).expect("series serializes"));
        }
        OutFormat::Table => println!("{}", s.display()),
    }
}
