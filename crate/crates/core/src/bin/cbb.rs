//! Command-line front end: one verb per pipeline stage plus the
//! verification oracle.
//!
//! Exit codes: 0 success, 1 verification failure, 2 unsupported instance
//! (not zero-dimensional, non-rational variety point), 3 parse or usage
//! error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cbb_core::compsys::{self, GenericBranchPayload, VanishingMode};
use cbb_core::context::Block;
use cbb_core::domain::QQ;
use cbb_core::error::Error;
use cbb_core::groebner;
use cbb_core::parametric::{Specialization, TermOrderBorderBasis};
use cbb_core::parse::{parse_specialization, parse_system, SystemFile};
use cbb_core::render::{self, StructuredDoc};

#[derive(Parser)]
#[command(
    name = "cbb",
    about = "Border systems and comprehensive border bases over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum VanishingArg {
    Squares,
    #[value(name = "linear-univariate")]
    LinearUnivariate,
}

impl From<VanishingArg> for VanishingMode {
    fn from(v: VanishingArg) -> Self {
        match v {
            VanishingArg::Squares => VanishingMode::Squares,
            VanishingArg::LinearUnivariate => VanishingMode::LinearUnivariate,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenericBranchArg {
    F,
    Eliminant,
}

impl From<GenericBranchArg> for GenericBranchPayload {
    fn from(v: GenericBranchArg) -> Self {
        match v {
            GenericBranchArg::F => GenericBranchPayload::Generators,
            GenericBranchArg::Eliminant => GenericBranchPayload::Eliminant,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Bs,
    Cbb,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of the system in the declared order.
    Gb {
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generators of the parameter elimination ideal.
    Eliminate {
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Border basis of the system specialized at a parameter point.
    BorderBasis {
        file: String,
        /// Parameter assignments, e.g. z=4 or u=1,v=-1/2.
        #[arg(long)]
        at: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Border system: one branch per parameter-variety point plus the
    /// generic branch.
    BorderSystem {
        file: String,
        #[arg(long, value_enum, default_value = "f")]
        generic_branch: GenericBranchArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Comprehensive border basis.
    Cbb {
        file: String,
        #[arg(long, value_enum, default_value = "squares")]
        vanishing: VanishingArg,
        #[arg(long, value_enum, default_value = "f")]
        generic_branch: GenericBranchArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Specialize the generators, or a comprehensive border basis, at a
    /// parameter point.
    Specialize {
        file: String,
        #[arg(long)]
        at: String,
        /// Structured document holding a cbb section to specialize.
        #[arg(long)]
        cbb: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify a border system or comprehensive border basis against the
    /// generators at every variety point and sampled complement points.
    Verify {
        file: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "squares")]
        vanishing: VanishingArg,
        #[arg(long, value_enum, default_value = "f")]
        generic_branch: GenericBranchArg,
        /// Verify a previously rendered cbb document instead of
        /// recomputing one.
        #[arg(long)]
        cbb: Option<String>,
    },
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

fn load_system(path: &str) -> Result<SystemFile, Error> {
    let text = read_input(path).map_err(|e| Error::Parse {
        line: 0,
        col: 0,
        msg: format!("cannot read {path}: {e}"),
    })?;
    let system = parse_system(&text)?;
    for idx in &system.degenerate {
        eprintln!("warning: poly {} is the zero polynomial", idx + 1);
    }
    Ok(system)
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } => 3,
        _ => 2,
    }
}

fn parse_at(at: &Option<String>, system: &SystemFile) -> Result<Specialization, Error> {
    match at {
        Some(text) => parse_specialization(text, &system.ctx),
        None => {
            if system.ctx.n_params() == 0 {
                Ok(Specialization::new(Vec::new()))
            } else {
                Err(Error::Parse {
                    line: 0,
                    col: 0,
                    msg: "--at is required when the system has parameters".into(),
                })
            }
        }
    }
}

fn ensure_same_vars(ctx: &cbb_core::context::Ctx, system: &SystemFile) -> Result<(), Error> {
    if ctx.main_names() != system.ctx.main_names() || ctx.param_names() != system.ctx.param_names()
    {
        return Err(Error::Parse {
            line: 0,
            col: 0,
            msg: "document variables do not match the system file".into(),
        });
    }
    Ok(())
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gb { file, format } => {
            let system = load_system(&file)?;
            let gb = groebner::reduced_groebner_basis(&QQ, &system.polys, system.order)?;
            match format {
                Format::Text => {
                    for g in &gb.gens {
                        println!("{}", render::render_poly(g, system.order));
                    }
                }
                Format::Structured => {
                    let mut doc = StructuredDoc::new(&system.ctx, &system.order_name);
                    doc.basis = Some(
                        gb.gens
                            .iter()
                            .map(|g| render::render_poly(g, system.order))
                            .collect(),
                    );
                    print!("{}", doc.to_json());
                }
            }
            Ok(0)
        }
        Command::Eliminate { file, format } => {
            let system = load_system(&file)?;
            let elim = groebner::elimination_ideal(&system.polys)?;
            match format {
                Format::Text => {
                    for g in &elim {
                        println!("{}", render::render_poly(g, system.order));
                    }
                }
                Format::Structured => {
                    let mut doc = StructuredDoc::new(&system.ctx, &system.order_name);
                    doc.eliminant = Some(
                        elim.iter()
                            .map(|g| render::render_poly(g, system.order))
                            .collect(),
                    );
                    print!("{}", doc.to_json());
                }
            }
            Ok(0)
        }
        Command::BorderBasis { file, at, format } => {
            let system = load_system(&file)?;
            let sigma = parse_at(&at, &system)?;
            let specialized = compsys::specialize_generators(&system.polys, &sigma)?;
            let nonzero: Vec<_> = specialized.into_iter().filter(|f| !f.is_zero()).collect();
            let gb = groebner::reduced_groebner_basis(&QQ, &nonzero, system.order)?;
            let bb = cbb_core::gb_to_border_basis(&QQ, &gb, system.ctx.n_main())?;
            match format {
                Format::Text => {
                    println!(
                        "order_ideal: {}",
                        render::render_order_ideal(&bb.order_ideal, &system.ctx, system.order)
                    );
                    println!("basis:");
                    for (el, mark) in bb.elements.iter().zip(&bb.marks) {
                        println!(
                            "  [{}] {}",
                            render::render_monomial(mark, &system.ctx, Block::Main),
                            render::render_poly(el, system.order)
                        );
                    }
                }
                Format::Structured => {
                    let mut doc = StructuredDoc::new(&system.ctx, &system.order_name);
                    doc.order_ideal = Some(
                        bb.order_ideal
                            .iter()
                            .map(|m| render::render_monomial(m, &system.ctx, Block::Main))
                            .collect(),
                    );
                    doc.basis = Some(
                        bb.elements
                            .iter()
                            .map(|e| render::render_poly(e, system.order))
                            .collect(),
                    );
                    print!("{}", doc.to_json());
                }
            }
            Ok(0)
        }
        Command::BorderSystem {
            file,
            generic_branch,
            format,
        } => {
            let system = load_system(&file)?;
            let bs = compsys::compute_border_system_with(
                &system.polys,
                system.order,
                generic_branch.into(),
                &TermOrderBorderBasis,
            )?;
            match format {
                Format::Text => print!("{}", render::render_border_system(&bs)),
                Format::Structured => {
                    let mut doc = StructuredDoc::new(&system.ctx, &system.order_name);
                    render::border_system_doc(&bs, &mut doc);
                    print!("{}", doc.to_json());
                }
            }
            Ok(0)
        }
        Command::Cbb {
            file,
            vanishing,
            generic_branch,
            format,
        } => {
            let system = load_system(&file)?;
            let bs = compsys::compute_border_system_with(
                &system.polys,
                system.order,
                generic_branch.into(),
                &TermOrderBorderBasis,
            )?;
            let cbb = compsys::compute_cbb(&bs, vanishing.into())?;
            match format {
                Format::Text => print!("{}", render::render_cbb(&cbb)),
                Format::Structured => {
                    let mut doc = StructuredDoc::new(&system.ctx, &system.order_name);
                    render::border_system_doc(&bs, &mut doc);
                    render::cbb_doc(&cbb, &mut doc);
                    print!("{}", doc.to_json());
                }
            }
            Ok(0)
        }
        Command::Specialize {
            file,
            at,
            cbb,
            format,
        } => {
            let system = load_system(&file)?;
            let sigma = parse_specialization(&at, &system.ctx)?;
            match cbb {
                Some(path) => {
                    let text = read_input(&path).map_err(|e| Error::Parse {
                        line: 0,
                        col: 0,
                        msg: format!("cannot read {path}: {e}"),
                    })?;
                    let doc: StructuredDoc =
                        serde_json::from_str(&text).map_err(|e| Error::Parse {
                            line: 0,
                            col: 0,
                            msg: format!("bad structured document: {e}"),
                        })?;
                    let cbb = render::cbb_from_doc(&doc)?;
                    ensure_same_vars(&cbb.ctx, &system)?;
                    let sb = compsys::specialize_cbb(&cbb, &sigma)?;
                    match format {
                        Format::Text => {
                            print!("{}", render::render_specialized(&sb, &cbb.ctx, cbb.ord))
                        }
                        Format::Structured => {
                            let mut out = StructuredDoc::new(&cbb.ctx, &system.order_name);
                            out.order_ideal = Some(
                                sb.order_ideal
                                    .iter()
                                    .map(|m| render::render_monomial(m, &cbb.ctx, Block::Main))
                                    .collect(),
                            );
                            out.basis = Some(
                                sb.elements
                                    .iter()
                                    .map(|e| render::render_poly(e, cbb.ord))
                                    .collect(),
                            );
                            print!("{}", out.to_json());
                        }
                    }
                }
                None => {
                    let specialized = compsys::specialize_generators(&system.polys, &sigma)?;
                    match format {
                        Format::Text => {
                            for p in &specialized {
                                println!("{}", render::render_poly(p, system.order));
                            }
                        }
                        Format::Structured => {
                            let mut doc = StructuredDoc::new(&system.ctx, &system.order_name);
                            doc.basis = Some(
                                specialized
                                    .iter()
                                    .map(|p| render::render_poly(p, system.order))
                                    .collect(),
                            );
                            print!("{}", doc.to_json());
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            file,
            mode,
            samples,
            seed,
            vanishing,
            generic_branch,
            cbb,
        } => {
            let system = load_system(&file)?;
            let report = match mode {
                ModeArg::Bs => {
                    let bs = compsys::compute_border_system_with(
                        &system.polys,
                        system.order,
                        generic_branch.into(),
                        &TermOrderBorderBasis,
                    )?;
                    compsys::verify_border_system(&bs, &system.polys, samples, seed)
                }
                ModeArg::Cbb => {
                    let cbb_value = match cbb {
                        Some(path) => {
                            let text = read_input(&path).map_err(|e| Error::Parse {
                                line: 0,
                                col: 0,
                                msg: format!("cannot read {path}: {e}"),
                            })?;
                            let doc: StructuredDoc =
                                serde_json::from_str(&text).map_err(|e| Error::Parse {
                                    line: 0,
                                    col: 0,
                                    msg: format!("bad structured document: {e}"),
                                })?;
                            let cbb = render::cbb_from_doc(&doc)?;
                            ensure_same_vars(&cbb.ctx, &system)?;
                            cbb
                        }
                        None => {
                            let bs = compsys::compute_border_system_with(
                                &system.polys,
                                system.order,
                                generic_branch.into(),
                                &TermOrderBorderBasis,
                            )?;
                            compsys::compute_cbb(&bs, vanishing.into())?
                        }
                    };
                    compsys::verify_cbb(&cbb_value, &system.polys, samples, seed)
                }
            };
            print!("{}", render::render_report(&report));
            Ok(if report.all_ok() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
