//! Command-line front end. Output is deterministic and canonically ordered;
//! summary lines are machine-parseable `key=value` pairs.
//!
//! Exit status: 0 on success, 1 on mathematical failure (an axiom or
//! identity asserted to hold was violated), 2 on usage or parse errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use eds_core::bialgebra::{
    coproduct_tree, coproduct_word, coproduct_word_deconcat, Extended, TensorPoly,
    TreeCoproductMode,
};
use eds_core::catalog::catalog2;
use eds_core::conformance::{verify_all, ConformanceConfig, Outcome};
use eds_core::eds::{check_eds, format_eds, parse_eds, CheckMode, FiniteEds, Side};
use eds_core::enumerate::{enumerate_eds, EnumFilter};
use eds_core::iso::are_isomorphic;
use eds_core::nondegen::nondegeneracy;
use eds_core::operad::{
    check_associative, compose, format_arity2_fp, koszul_dual_dim3, parse_arity2, AssocMode,
    OperadElement,
};
use eds_core::scalar::{rat, rat_to_string, Rat};
use eds_core::tree::parse_tree;
use eds_core::tree_product::{shuffle_product_trees, typed_product, TreePoly};
use eds_core::word::{word_product, word_shuffle_product, Alphabet, WordPoly};
use eds_core::EdsError;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "eds",
    about = "Extended diassociative semigroups: classification, typed-tree and typed-word \
             dendriform products, operad computations, and coproducts",
    version
)]
struct Cli {
    /// Cap the worker-thread count for parallel searches.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Prec,
    Succ,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Prec => Side::Prec,
            SideArg::Succ => Side::Succ,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Trees,
    Words,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Recursive,
    Shuffle,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoproductModeArg {
    Recursive,
    Cuts,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the axioms of a structure file and report nondegeneracy.
    Check { file: PathBuf },
    /// Print the named classification catalog for the given carrier size.
    Catalog {
        #[arg(long, default_value_t = 2)]
        size: usize,
    },
    /// Exhaustively enumerate structures on a small carrier.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// Only the (left, right) fragment.
        #[arg(long)]
        diassociative: bool,
        #[arg(long)]
        nondegenerate: bool,
        #[arg(long)]
        commutative: bool,
        #[arg(long = "up-to-iso")]
        up_to_iso: bool,
    },
    /// Corank and pair-map bijectivity of a structure.
    Corank { file: PathBuf },
    /// Decide isomorphism of two structures.
    Iso { file1: PathBuf, file2: PathBuf },
    /// Multiply two tree or word literals.
    Mul(MulArgs),
    /// Operadic composition of a tree with argument trees.
    Compose {
        #[arg(long)]
        eds: PathBuf,
        tree: String,
        args: Vec<String>,
    },
    /// Verify associativity of an arity-2 element (both check modes).
    AssocVerify {
        #[arg(long)]
        eds: PathBuf,
        element: String,
    },
    /// Exhaustive search for associative arity-2 elements over F_p.
    AssocSearch {
        #[arg(long)]
        eds: PathBuf,
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// Arity-3 dimension of the Koszul dual presentation.
    KoszulDim3 { file: PathBuf },
    /// Coproduct of an extended element `<sym> <literal>`.
    Coproduct {
        #[arg(long)]
        eds: PathBuf,
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value = "recursive")]
        mode: CoproductModeArg,
        element: String,
    },
    /// Run the full conformance suite for one structure.
    VerifyAll {
        #[arg(long)]
        eds: PathBuf,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Args)]
struct MulArgs {
    #[arg(long)]
    eds: PathBuf,
    #[arg(long, value_enum)]
    side: SideArg,
    #[arg(long = "type")]
    type_sym: u8,
    #[arg(long, value_enum)]
    algebra: AlgebraArg,
    #[arg(long, value_enum, default_value = "recursive")]
    method: MethodArg,
    lhs: String,
    rhs: String,
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away (e.g. `eds ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    match run(cli.command) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn math_fail() -> ExitCode {
    ExitCode::from(1)
}

fn load(path: &std::path::Path) -> Result<FiniteEds, EdsError> {
    let text = std::fs::read_to_string(path).map_err(|e| EdsError::Parse {
        line: 0,
        col: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    parse_eds(&text)
}

fn run(cmd: Command) -> Result<ExitCode, EdsError> {
    match cmd {
        Command::Check { file } => {
            let eds = load(&file)?;
            let report = check_eds(&eds, CheckMode::Pointwise);
            if report.passed() {
                let nd = nondegeneracy(&eds);
                let kind = if nd.nondegenerate() {
                    "nondegenerate"
                } else {
                    "degenerate"
                };
                println!("OK {kind} corank={}", nd.corank);
                Ok(ExitCode::SUCCESS)
            } else {
                println!("FAIL violations={}", report.violations.len());
                for v in &report.violations {
                    println!(
                        "axiom={} witness=({},{},{}) lhs={} rhs={}",
                        v.axiom, v.witness.0, v.witness.1, v.witness.2, v.lhs, v.rhs
                    );
                }
                Ok(math_fail())
            }
        }
        Command::Catalog { size } => {
            if size != 2 {
                return Err(EdsError::UnsupportedSize(format!(
                    "catalog is available for size 2, not {size}"
                )));
            }
            let cat = catalog2();
            println!("total={}", cat.len());
            for e in cat {
                print!("{}", format_eds(&e));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            size,
            diassociative,
            nondegenerate,
            commutative,
            up_to_iso,
        } => {
            let filter = EnumFilter {
                diassociative_only: diassociative,
                nondegenerate_only: nondegenerate,
                commutative_only: commutative,
                up_to_iso,
            };
            let result = enumerate_eds(size, &filter)?;
            println!("total={}", result.total());
            if let Some(sizes) = &result.class_sizes {
                println!("classes={}", sizes.len());
                for (i, (rep, csize)) in result.items.iter().zip(sizes).enumerate() {
                    let mut labeled = rep.clone();
                    labeled.label = Some(format!("class{i:02}_size{csize}"));
                    print!("{}", format_eds(&labeled));
                }
            } else {
                for rep in &result.items {
                    print!("{}", format_eds(rep));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corank { file } => {
            let eds = load(&file)?;
            let nd = nondegeneracy(&eds);
            println!(
                "corank={} left_bijective={} right_bijective={}",
                nd.corank, nd.left_bijective, nd.right_bijective
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { file1, file2 } => {
            let e1 = load(&file1)?;
            let e2 = load(&file2)?;
            match are_isomorphic(&e1, &e2) {
                Some(sigma) => {
                    let s: Vec<String> = sigma.iter().map(|x| x.to_string()).collect();
                    println!("isomorphic sigma=[{}]", s.join(","));
                }
                None => println!("not-isomorphic"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mul(args) => run_mul(args),
        Command::Compose { eds, tree, args } => {
            let e = load(&eds)?;
            let t = parse_tree(&tree)?;
            let element = OperadElement::from_tree(t, rat(1));
            let parsed: Result<Vec<_>, _> = args
                .iter()
                .map(|a| parse_tree(a).map(|t| OperadElement::from_tree(t, rat(1))))
                .collect();
            let out = compose(&e, &element, &parsed?)?;
            print_tree_poly(out.value());
            Ok(ExitCode::SUCCESS)
        }
        Command::AssocVerify { eds, element } => {
            let e = load(&eds)?;
            let m = parse_arity2(&element)?;
            let eq = check_associative(&e, &m, AssocMode::Equations);
            let comp = check_associative(&e, &m, AssocMode::Composition);
            if eq.associative != comp.associative {
                println!("modes-disagree");
                return Ok(math_fail());
            }
            if eq.associative {
                println!("associative=true");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("associative=false");
                for (family, (a, b)) in eq.witnesses.iter().take(4) {
                    println!("witness equation=\"{family}\" pair=({a},{b})");
                }
                Ok(math_fail())
            }
        }
        Command::AssocSearch { eds, modulus } => {
            let e = load(&eds)?;
            let sols = eds_core::operad::solve_associative_fp(&e, modulus)?;
            println!("solutions={}", sols.len());
            for m in &sols {
                println!("{}", format_arity2_fp(m));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::KoszulDim3 { file } => {
            let eds = load(&file)?;
            let dim = koszul_dual_dim3(&eds);
            let nd = nondegeneracy(&eds);
            let formula = 3 * eds.size() * eds.size() + 2 * nd.corank;
            println!("dim3={dim} formula={formula} corank={}", nd.corank);
            Ok(if dim == formula {
                ExitCode::SUCCESS
            } else {
                math_fail()
            })
        }
        Command::Coproduct {
            eds,
            algebra,
            mode,
            element,
        } => {
            let e = load(&eds)?;
            let (sym_str, lit) =
                element
                    .trim()
                    .split_once(char::is_whitespace)
                    .ok_or(EdsError::Parse {
                        line: 1,
                        col: 1,
                        msg: "expected `<sym> <literal>`".into(),
                    })?;
            let sym: u8 = sym_str.parse().map_err(|_| EdsError::Parse {
                line: 1,
                col: 1,
                msg: format!("`{sym_str}` is not a symbol"),
            })?;
            match algebra {
                AlgebraArg::Trees => {
                    let t = parse_tree(lit)?;
                    let x = Extended::term((sym, t), rat(1));
                    let d = match mode {
                        CoproductModeArg::Recursive => {
                            coproduct_tree(&e, TreeCoproductMode::Recursive, &x)?
                        }
                        CoproductModeArg::Cuts => coproduct_tree(&e, TreeCoproductMode::Cuts, &x)?,
                    };
                    print_tensor(&d, |t| t.to_string());
                }
                AlgebraArg::Words => {
                    let alpha = Alphabet::collect(&[lit])?;
                    let w = alpha.parse_word(lit)?;
                    let x = Extended::term((sym, w), rat(1));
                    let d = match mode {
                        CoproductModeArg::Recursive => coproduct_word(&e, &x)?,
                        CoproductModeArg::Cuts => coproduct_word_deconcat(&e, &x)?,
                    };
                    print_tensor(&d, |w| alpha.format_word(w));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyAll { eds, bound, seed } => {
            let e = load(&eds)?;
            let config = ConformanceConfig {
                bound: bound.max(3),
                pair_bound: bound.min(4),
                seed,
                samples: 1000,
            };
            println!("seed={seed:#x}");
            let (outcomes, discrepancies) = verify_all(&e, &config);
            let mut failed = false;
            for (name, outcome) in &outcomes {
                match outcome {
                    Outcome::Pass => println!("check={name} status=pass"),
                    Outcome::Skipped(why) => println!("check={name} status=skipped note=\"{why}\""),
                    Outcome::Fail(why) => {
                        failed = true;
                        println!("check={name} status=fail detail=\"{why}\"");
                    }
                }
            }
            for d in &discrepancies {
                println!("discrepancy {d}");
            }
            println!("result={}", if failed { "fail" } else { "pass" });
            Ok(if failed {
                math_fail()
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn run_mul(args: MulArgs) -> Result<ExitCode, EdsError> {
    let e = load(&args.eds)?;
    let side: Side = args.side.into();
    match args.algebra {
        AlgebraArg::Trees => {
            let x = parse_tree(&args.lhs)?;
            let y = parse_tree(&args.rhs)?;
            let out: TreePoly<Rat> = match args.method {
                MethodArg::Recursive => typed_product(
                    &e,
                    side,
                    args.type_sym,
                    &TreePoly::term(x, rat(1)),
                    &TreePoly::term(y, rat(1)),
                )?,
                MethodArg::Shuffle => shuffle_product_trees(&e, side, args.type_sym, &x, &y)?,
            };
            print_tree_poly(&out);
        }
        AlgebraArg::Words => {
            let alpha = Alphabet::collect(&[args.lhs.as_str(), args.rhs.as_str()])?;
            let x = alpha.parse_word(&args.lhs)?;
            let y = alpha.parse_word(&args.rhs)?;
            let out: WordPoly<Rat> = match args.method {
                MethodArg::Recursive => word_product(
                    &e,
                    side,
                    args.type_sym,
                    &WordPoly::term(x, rat(1)),
                    &WordPoly::term(y, rat(1)),
                )?,
                MethodArg::Shuffle => word_shuffle_product(&e, side, args.type_sym, &x, &y)?,
            };
            if out.is_zero() {
                println!("0");
            }
            for (w, c) in out.iter() {
                println!("{} {}", rat_to_string(c), alpha.format_word(w));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_tree_poly(p: &TreePoly<Rat>) {
    if p.is_zero() {
        println!("0");
    }
    for (t, c) in p.iter() {
        println!("{} {}", rat_to_string(c), t);
    }
}

fn print_tensor<B: Ord + Clone>(d: &TensorPoly<B, Rat>, show: impl Fn(&B) -> String) {
    if d.is_zero() {
        println!("0");
    }
    for (((s1, b1), (s2, b2)), c) in d.iter() {
        println!(
            "{} ({} ⊗ {}) ⊗ ({} ⊗ {})",
            rat_to_string(c),
            s1,
            show(b1),
            s2,
            show(b2)
        );
    }
}
