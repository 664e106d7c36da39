//! The `compute` subcommand: graded components as dimension plus RREF basis,
//! served from the cache when a verified record exists.

use clap::ValueEnum;
use serde::Serialize;

use dsl_core::{dmr0_component, ds_component, ginert_component, q_to_string, Alphabet, Subspace};

use crate::cache::{self, SubspacePayload};
use crate::{Cli, Failure, OutFormat};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// Double shuffle component over e0, e1.
    Dmr0,
    /// Inertial component over e0, e1.
    Ginert,
    /// Double shuffle component in the x, y presentation.
    Ds,
}

impl Object {
    fn name(self) -> &'static str {
        match self {
            Object::Dmr0 => "dmr0",
            Object::Ginert => "ginert",
            Object::Ds => "ds",
        }
    }

    fn component(self, degree: usize) -> (Alphabet, Subspace) {
        match self {
            Object::Dmr0 => (Alphabet::e01(), dmr0_component(degree)),
            Object::Ginert => (Alphabet::e01(), ginert_component(degree)),
            Object::Ds => (Alphabet::xy(), ds_component(degree)),
        }
    }
}

#[derive(Serialize)]
struct ComputeOutput {
    object: String,
    degree: usize,
    alphabet: Vec<String>,
    coordinates: String,
    ambient_dim: usize,
    dim: usize,
    basis: Vec<Vec<String>>,
}

fn fresh_payload(object: Object, degree: usize) -> SubspacePayload {
    let (alphabet, subspace) = object.component(degree);
    SubspacePayload {
        alphabet: alphabet.names().to_vec(),
        coordinates: "lyndon".into(),
        ambient_dim: subspace.ambient_dim(),
        dim: subspace.dim(),
        basis: subspace
            .basis()
            .iter()
            .map(|row| row.iter().map(q_to_string).collect())
            .collect(),
    }
}

pub fn run(object: Object, degree: usize, cli: &Cli) -> Result<(), Failure> {
    if degree < 2 {
        return Err(Failure::Input(format!(
            "--degree must be at least 2 (the graded families start there), got {degree}"
        )));
    }
    let dir = cache::resolve_dir(cli.cache_dir.clone());
    let payload = match cache::load(&dir, object.name(), degree) {
        Some(payload) => payload,
        None => {
            let payload = fresh_payload(object, degree);
            if let Err(e) = cache::store(&dir, object.name(), degree, &payload) {
                eprintln!("warning: cache write to {} failed: {e}", dir.display());
            }
            payload
        }
    };
    match cli.out {
        OutFormat::Json => {
            let output = ComputeOutput {
                object: object.name().into(),
                degree,
                alphabet: payload.alphabet,
                coordinates: payload.coordinates,
                ambient_dim: payload.ambient_dim,
                dim: payload.dim,
                basis: payload.basis,
            };
            println!("{}", serde_json::to_string(&output).expect("output serializes"));
        }
        OutFormat::Table => {
            println!("object       {}", object.name());
            println!("degree       {degree}");
            println!("alphabet     {}", payload.alphabet.join(" "));
            println!("coordinates  {}", payload.coordinates);
            println!("ambient dim  {}", payload.ambient_dim);
            println!("dim          {}", payload.dim);
            for (i, row) in payload.basis.iter().enumerate() {
                println!("basis[{i}]     {}", row.join(" "));
            }
        }
    }
    Ok(())
}
