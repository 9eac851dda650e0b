use std::path::Path;

use clap::ValueEnum;
use pind_core::graph::{gen_two_tree, random_halin, wheel};
use pind_core::reduction::{
    certify_grid, certify_halin, certify_subcubic, certify_two_tree, GridVariant, ReductionCertificate, ReductionError,
};
use pind_core::IndexFunction;
use serde_json::{json, Value};

use crate::{load_graph, CliError, VariantArg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Subcubic,
    #[value(name = "2tree")]
    TwoTree,
    Halin,
    Grid,
}

pub struct Certified {
    pub certificate: ReductionCertificate,
    /// Digest of the input file, or of the generated graph.
    pub input_digest: String,
    /// Family-specific checks worth reporting.
    pub extra: Option<Value>,
}

fn number<T: std::str::FromStr>(args: &[String], i: usize, what: &str) -> Result<T, CliError> {
    let s = args.get(i).ok_or_else(|| CliError::Input(format!("missing argument {what}")))?;
    s.parse().map_err(|_| CliError::Input(format!("{what} must be a non-negative integer, got {s:?}")))
}

fn arity(args: &[String], n: usize, usage: &str) -> Result<(), CliError> {
    if args.len() == n {
        Ok(())
    } else {
        Err(CliError::Input(format!("expected arguments: {usage}")))
    }
}

fn reduction_err(e: ReductionError) -> CliError {
    match e {
        ReductionError::Graph(_) | ReductionError::Index(_) | ReductionError::Precondition(_) => {
            CliError::Input(e.to_string())
        }
        _ => CliError::Verification(e.to_string()),
    }
}

fn graph_digest(cert: &ReductionCertificate) -> String {
    crate::digest(serde_json::to_string(&cert.graph).expect("graph serializes").as_bytes())
}

/// Builds the certificate named by `family` and its positional arguments.
pub fn certify(family: Family, args: &[String], variant: VariantArg) -> Result<Certified, CliError> {
    let (certificate, input_digest, extra) = match family {
        Family::Subcubic => {
            arity(args, 1, "subcubic FILE")?;
            let (g, _, d) = load_graph(Path::new(&args[0]), false)?;
            if g.max_degree() > 3 {
                return Err(CliError::Input(format!("graph has maximum degree {} > 3", g.max_degree())));
            }
            let cert = certify_subcubic(&g, &IndexFunction::constant(&g, 1, 1)).map_err(reduction_err)?;
            (cert, d, None)
        }
        Family::TwoTree => {
            arity(args, 2, "2tree N SEED")?;
            let t = gen_two_tree(number(args, 0, "N")?, number(args, 1, "SEED")?)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let cert = certify_two_tree(&t, &IndexFunction::constant(&t.graph, 1, 1)).map_err(reduction_err)?;
            let d = graph_digest(&cert);
            (cert, d, None)
        }
        Family::Halin => {
            let h = match args.first().map(String::as_str) {
                Some("wheel") => {
                    arity(args, 2, "halin wheel K")?;
                    wheel(number(args, 1, "K")?)
                }
                Some("random") => {
                    arity(args, 3, "halin random INTERNAL SEED")?;
                    random_halin(number(args, 1, "INTERNAL")?, number(args, 2, "SEED")?)
                }
                _ => return Err(CliError::Input("expected `halin wheel K` or `halin random INTERNAL SEED`".into())),
            }
            .map_err(|e| CliError::Input(e.to_string()))?;
            let hc = certify_halin(&h).map_err(reduction_err)?;
            let cases: Vec<Value> = hc
                .cases
                .iter()
                .map(|c| {
                    json!({
                        "vertex": c.vertex,
                        "case": format!("{:?}", c.case),
                        "in_d_prime": c.in_d_prime,
                        "in_d": c.in_d,
                        "out_d_prime": c.out_d_prime,
                        "slack": c.slack().to_string(),
                    })
                })
                .collect();
            let extra = json!({ "x": hc.reduction.x, "eta_prime": hc.eta_prime.vertices, "cases": cases });
            let d = graph_digest(&hc.certificate);
            (hc.certificate, d, Some(extra))
        }
        Family::Grid => {
            arity(args, 2, "grid N M")?;
            let v = match variant {
                VariantArg::Uniform => GridVariant::Uniform,
                VariantArg::Corner => GridVariant::Corner,
            };
            let cert = certify_grid(number(args, 0, "N")?, number(args, 1, "M")?, v).map_err(reduction_err)?;
            let d = graph_digest(&cert);
            (cert, d, Some(json!({ "variant": format!("{variant:?}") })))
        }
    };
    Ok(Certified { certificate, input_digest, extra })
}
