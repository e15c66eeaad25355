//! Command-line front end for `latquot-core`.
//!
//! Every subcommand reads JSON documents from files, calls exactly one
//! library operation and prints a single JSON object with sorted keys.
//! Exact values are `"p/q"` strings; floating renderings carry a `_float`
//! suffix and 12 significant digits.
//!
//! Exit codes: `0` success, `1` domain error, `2` input error. Errors are
//! reported as `{"error": {"kind", "message", "input"}}`.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use latquot_core::exactnum::{format_rational, parse_rational, to_f64, MatQ, Rational};
use latquot_core::wire::{
    complex_matrix_from_doc, int_matrix_to_doc, int_vector_from_doc, int_vector_to_doc,
    matrix_from_doc, matrix_to_doc, vector_from_doc, ComplexMatrixDoc, LatticeDoc, MatrixDoc,
    TorusPointDoc, VectorDoc,
};
use latquot_core::{
    complex, flat, moduli, quotient, Error, InducedMap, Lattice, LatticeVector, TorusPoint,
};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "latquot",
    version,
    about = "Exact computations with lattices and their quotient tori"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result document here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LatticeArg {
    /// Lattice document.
    #[arg(long)]
    pub lattice: PathBuf,
}

#[derive(Debug, Args)]
pub struct LatticePair {
    #[arg(long)]
    pub lattice: PathBuf,
    #[arg(long)]
    pub lattice2: PathBuf,
    /// Require an orientation-preserving witness.
    #[arg(long)]
    pub oriented: bool,
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Rational matrix document.
    #[arg(long)]
    pub matrix: PathBuf,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    /// Ambient linear map.
    #[arg(long)]
    pub matrix: PathBuf,
    /// Source lattice.
    #[arg(long)]
    pub source: PathBuf,
    /// Target lattice.
    #[arg(long)]
    pub target: PathBuf,
    /// Torus point on the source to push forward.
    #[arg(long)]
    pub point: Option<PathBuf>,
    /// Parallelepiped edge coordinates (columns, entries in [0, 1)) whose image volume to report.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce an ambient vector to a point of the torus.
    Reduce {
        #[arg(long)]
        lattice: PathBuf,
        /// Ambient vector document.
        #[arg(long)]
        vector: PathBuf,
    },
    /// Add two torus points.
    Add {
        #[arg(long)]
        point: PathBuf,
        #[arg(long)]
        point2: PathBuf,
    },
    /// Check a linear map preserves lattices and describe the induced map.
    Induce(MapArgs),
    /// Covolume of a lattice, optionally with a parallelepiped volume.
    Volume {
        #[arg(long, required_unless_present = "point", conflicts_with = "point")]
        lattice: Option<PathBuf>,
        /// Use the lattice of this torus point.
        #[arg(long)]
        point: Option<PathBuf>,
        /// Parallelepiped edge coordinates (columns, entries in [0, 1)).
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// Volume of the torus of a lattice scaled by a real factor.
    VolumeScaled {
        #[arg(long)]
        lattice: PathBuf,
        /// A rational, optionally followed by `pi`, e.g. `2pi` or `1/3pi`.
        #[arg(long, allow_hyphen_values = true)]
        scale: String,
    },
    /// Gram form of a lattice basis.
    Gram(LatticeArg),
    /// Shortest nonzero vectors.
    Shortest(LatticeArg),
    /// Squared lengths of closed geodesics up to a bound, with multiplicities.
    Spectrum {
        #[arg(long)]
        lattice: PathBuf,
        /// Squared-length bound `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        bound: String,
    },
    /// Angle between two closed geodesics through the origin.
    Angle {
        #[arg(long)]
        lattice: PathBuf,
        /// Integer coefficient vector in the lattice basis.
        #[arg(long)]
        vector: PathBuf,
        #[arg(long)]
        vector2: PathBuf,
    },
    /// Injectivity radius of the quotient map.
    Injectivity(LatticeArg),
    /// Decide whether two tori are isometric by a rotation.
    Isometric(LatticePair),
    /// Real matrix of a complex matrix.
    Realify {
        /// Complex matrix document.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Whether a real 2n×2n matrix is unitary.
    IsUnitary(MatrixArg),
    /// Induced map of a complex-linear map between lattices in Cⁿ.
    ComplexInduce(MapArgs),
    /// `T ↦ TᵀT`.
    GramMap(MatrixArg),
    /// Whether two matrices lie in the same left orthogonal coset.
    CosetEq {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        matrix2: PathBuf,
    },
    /// Membership of a form in the determinant-one positive-definite forms.
    InM(MatrixArg),
    /// Membership of a matrix in SL(n, Z).
    InSigma(MatrixArg),
    /// Sign of the determinant of a matrix or of a lattice basis.
    Orientation {
        #[arg(long, required_unless_present = "lattice", conflicts_with = "lattice")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        lattice: Option<PathBuf>,
    },
    /// Equivalence of lattices in the double coset space.
    DoubleCoset(LatticePair),
}

/// A failure rendered as an error document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: String,
    pub message: String,
    pub input: Option<String>,
    pub exit_code: i32,
}

impl Failure {
    fn domain(err: Error, input: &Path) -> Failure {
        let exit_code = if err.is_input_error() { 2 } else { 1 };
        Failure {
            kind: err.kind().to_string(),
            message: err.to_string(),
            input: Some(input.display().to_string()),
            exit_code,
        }
    }

    fn input(kind: &str, message: String, input: Option<&Path>) -> Failure {
        Failure {
            kind: kind.to_string(),
            message,
            input: input.map(|p| p.display().to_string()),
            exit_code: 2,
        }
    }

    pub fn document(&self) -> Value {
        json!({"error": {"kind": self.kind, "message": self.message, "input": self.input}})
    }
}

/// The exit code and document produced by one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub document: Value,
}

impl Outcome {
    /// The document as printed: compact JSON, sorted keys, trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string(&self.document).expect("serializable");
        s.push('\n');
        s
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// Tags a library error with the input it is attributed to.
fn at(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::domain(e, path)
}

fn load<T: DeserializeOwned>(path: &Path) -> Run<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input("IoError", format!("cannot read input: {e}"), Some(path)))?;
    serde_json::from_str(&text).map_err(|e| {
        let kind = match e.classify() {
            serde_json::error::Category::Data => "SchemaError",
            _ => "ParseError",
        };
        Failure::input(kind, e.to_string(), Some(path))
    })
}

fn load_lattice(path: &Path) -> Run<Lattice> {
    load::<LatticeDoc>(path)?.to_lattice().map_err(at(path))
}

fn load_point(path: &Path) -> Run<TorusPoint> {
    load::<TorusPointDoc>(path)?.to_point().map_err(at(path))
}

fn load_matrix(path: &Path) -> Run<MatQ> {
    matrix_from_doc(&load::<MatrixDoc>(path)?).map_err(at(path))
}

fn load_complex(path: &Path) -> Run<complex::ComplexMatrix> {
    complex_matrix_from_doc(&load::<ComplexMatrixDoc>(path)?).map_err(at(path))
}

fn load_vector(path: &Path) -> Run<Vec<Rational>> {
    vector_from_doc(&load::<VectorDoc>(path)?).map_err(at(path))
}

fn load_coefficients(lattice: &Lattice, path: &Path) -> Run<LatticeVector> {
    let c = int_vector_from_doc(&load::<VectorDoc>(path)?).map_err(at(path))?;
    LatticeVector::new(lattice, c).map_err(at(path))
}

fn flag_rational(name: &str, text: &str) -> Run<Rational> {
    parse_rational(text).map_err(|e| Failure {
        kind: e.kind().to_string(),
        message: format!("--{name}: {e}"),
        input: Some(format!("--{name}")),
        exit_code: 2,
    })
}

/// `p/q` or `p/q` followed by `pi`; a bare `pi` means `1·π`.
fn parse_scale(text: &str) -> Run<(Rational, bool)> {
    match text.strip_suffix("pi") {
        Some("") => Ok((Rational::from_integer(1.into()), true)),
        Some(head) => Ok((flag_rational("scale", head)?, true)),
        None => Ok((flag_rational("scale", text)?, false)),
    }
}

/// A float with 12 significant digits; non-finite values become `null`.
pub fn float12(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float");
    json!(rounded)
}

fn q(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

fn point_doc(p: &TorusPoint) -> Value {
    serde_json::to_value(TorusPointDoc::from_point(p)).expect("serializable")
}

fn induced(map: &InducedMap, args: &MapArgs) -> Run<Value> {
    let mut out = json!({
        "transfer": int_matrix_to_doc(map.transfer()),
        "volume_scale": q(&map.volume_scale()),
        "source_covolume": q(&map.source().covolume()),
        "target_covolume": q(&map.target().covolume()),
    });
    if let Some(path) = &args.point {
        let p = load_point(path)?;
        let image = map.apply(&p).map_err(at(path))?;
        out["image"] = point_doc(&image);
    }
    if let Some(path) = &args.edges {
        let e = load_matrix(path)?;
        let source = quotient::parallelepiped_volume(map.source(), &e).map_err(at(path))?;
        let image = map.parallelepiped_image_volume(&e).map_err(at(path))?;
        out["parallelepiped_volume"] = q(&source);
        out["parallelepiped_image_volume"] = q(&image);
    }
    Ok(out)
}

fn witness(w: Option<latquot_core::MatZ>, key: &str) -> Value {
    match w {
        Some(u) => json!({key: true, "witness": int_matrix_to_doc(&u)}),
        None => json!({key: false, "witness": null}),
    }
}

fn dispatch(command: &Command) -> Run<Value> {
    Ok(match command {
        Command::Reduce { lattice, vector } => {
            let l = load_lattice(lattice)?;
            let x = load_vector(vector)?;
            point_doc(&TorusPoint::reduce(&l, &x).map_err(at(vector))?)
        }
        Command::Add { point, point2 } => {
            let p = load_point(point)?;
            let r = load_point(point2)?;
            point_doc(&quotient::torus_add(&p, &r).map_err(at(point2))?)
        }
        Command::Induce(args) => {
            let a = load_matrix(&args.matrix)?;
            let l1 = load_lattice(&args.source)?;
            let l2 = load_lattice(&args.target)?;
            let map = InducedMap::new(a, &l1, &l2).map_err(at(&args.matrix))?;
            induced(&map, args)?
        }
        Command::Volume {
            lattice,
            point,
            edges,
        } => {
            let l = match (lattice, point) {
                (Some(path), _) => load_lattice(path)?,
                (None, Some(path)) => load_point(path)?.lattice().clone(),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let mut out = json!({"covolume": q(&l.covolume())});
            if let Some(path) = edges {
                let e = load_matrix(path)?;
                out["parallelepiped_volume"] =
                    q(&quotient::parallelepiped_volume(&l, &e).map_err(at(path))?);
            }
            out
        }
        Command::VolumeScaled { lattice, scale } => {
            let l = load_lattice(lattice)?;
            let (c, pi) = parse_scale(scale)?;
            let factor = to_f64(&c) * if pi { std::f64::consts::PI } else { 1.0 };
            let v = quotient::volume_of_scaled(&l, factor).map_err(|e| Failure {
                input: Some("--scale".into()),
                ..Failure::domain(e, lattice)
            })?;
            json!({"scale": scale, "volume_float": float12(v)})
        }
        Command::Gram(LatticeArg { lattice }) => {
            let g = flat::gram(&load_lattice(lattice)?);
            json!({"gram": matrix_to_doc(g.matrix()), "det": q(&g.det())})
        }
        Command::Shortest(LatticeArg { lattice }) => {
            let s = flat::shortest_vectors(&load_lattice(lattice)?);
            let vectors: Vec<VectorDoc> = s
                .vectors
                .iter()
                .map(|v| int_vector_to_doc(v.coeffs()))
                .collect();
            json!({
                "squared_length": q(&s.squared_length),
                "length_float": float12(s.length()),
                "count": vectors.len(),
                "vectors": vectors,
            })
        }
        Command::Spectrum { lattice, bound } => {
            let l = load_lattice(lattice)?;
            let b = flag_rational("bound", bound)?;
            let spectrum = flat::geodesic_spectrum(&l, &b).map_err(|e| Failure {
                input: Some("--bound".into()),
                ..Failure::domain(e, lattice)
            })?;
            let entries: Vec<Value> = spectrum
                .iter()
                .map(|(len2, mult)| {
                    json!({
                        "squared_length": q(len2),
                        "length_float": float12(to_f64(len2).sqrt()),
                        "multiplicity": mult,
                    })
                })
                .collect();
            json!({"bound": q(&b), "spectrum": entries})
        }
        Command::Angle {
            lattice,
            vector,
            vector2,
        } => {
            let l = load_lattice(lattice)?;
            let v = load_coefficients(&l, vector)?;
            let w = load_coefficients(&l, vector2)?;
            let a = flat::angle(&v, &w).map_err(at(vector))?;
            json!({
                "radians_float": float12(a.radians),
                "degrees_float": float12(a.radians.to_degrees()),
                "signed_cos_squared": q(&a.signed_cos_squared),
            })
        }
        Command::Injectivity(LatticeArg { lattice }) => {
            let (r2, r) = flat::injectivity_radius(&load_lattice(lattice)?);
            json!({"radius_squared": q(&r2), "radius_float": float12(r)})
        }
        Command::Isometric(LatticePair {
            lattice,
            lattice2,
            oriented,
        }) => {
            let l1 = load_lattice(lattice)?;
            let l2 = load_lattice(lattice2)?;
            let w = flat::isometric_mod_rotation(&l1, &l2, *oriented).map_err(at(lattice2))?;
            let mut out = witness(w, "isometric");
            out["oriented"] = json!(oriented);
            out
        }
        Command::Realify { matrix } => {
            let m = load_complex(matrix)?;
            json!({"matrix": matrix_to_doc(&complex::realify(&m))})
        }
        Command::IsUnitary(MatrixArg { matrix }) => {
            let t = load_matrix(matrix)?;
            if t.dim() % 2 != 0 {
                return Err(Failure::domain(
                    Error::DimensionMismatch {
                        expected: t.dim() + 1,
                        found: t.dim(),
                    },
                    matrix,
                ));
            }
            let n = t.dim() / 2;
            let linear = complex::is_complex_linear(&t, n).map_err(at(matrix))?;
            let orthogonal = flat::is_orthogonal(&t);
            json!({
                "complex_linear": linear,
                "orthogonal": orthogonal,
                "unitary": complex::is_unitary(&t, n).map_err(at(matrix))?,
            })
        }
        Command::ComplexInduce(args) => {
            let a = load_complex(&args.matrix)?;
            let l1 = load_lattice(&args.source)?;
            let l2 = load_lattice(&args.target)?;
            let map = complex::complex_map_check(&a, &l1, &l2).map_err(at(&args.matrix))?;
            let mut out = induced(&map, args)?;
            out["realified"] = json!(matrix_to_doc(map.matrix()));
            out
        }
        Command::GramMap(MatrixArg { matrix }) => {
            let g = moduli::gram_map(&load_matrix(matrix)?).map_err(at(matrix))?;
            json!({"form": matrix_to_doc(g.matrix()), "det": q(&g.det())})
        }
        Command::CosetEq { matrix, matrix2 } => {
            let t1 = load_matrix(matrix)?;
            let t2 = load_matrix(matrix2)?;
            if t1.dim() != t2.dim() {
                return Err(Failure::domain(
                    Error::DimensionMismatch {
                        expected: t1.dim(),
                        found: t2.dim(),
                    },
                    matrix2,
                ));
            }
            json!({"same_coset": moduli::same_left_coset(&t1, &t2).map_err(at(matrix2))?})
        }
        Command::InM(MatrixArg { matrix }) => {
            json!({"in_m": moduli::in_m(&load_matrix(matrix)?)})
        }
        Command::InSigma(MatrixArg { matrix }) => {
            json!({"in_sigma": moduli::in_sigma(&load_matrix(matrix)?)})
        }
        Command::Orientation { matrix, lattice } => {
            let sign = match (matrix, lattice) {
                (Some(path), _) => moduli::orientation(&load_matrix(path)?).map_err(at(path))?,
                (None, Some(path)) => load_lattice(path)?.basis_orientation(),
                (None, None) => unreachable!("clap requires one of them"),
            };
            json!({"orientation": sign})
        }
        Command::DoubleCoset(LatticePair {
            lattice,
            lattice2,
            oriented,
        }) => {
            let l1 = load_lattice(lattice)?;
            let l2 = load_lattice(lattice2)?;
            let w = moduli::double_coset_equivalent(&l1, &l2, *oriented).map_err(at(lattice2))?;
            let mut out = witness(w, "equivalent");
            out["oriented"] = json!(oriented);
            out["orientations"] = json!([l1.basis_orientation(), l2.basis_orientation()]);
            out
        }
    })
}

/// Runs one parsed invocation.
pub fn run(cli: &Cli) -> Outcome {
    match dispatch(&cli.command) {
        Ok(document) => Outcome {
            exit_code: 0,
            document,
        },
        Err(f) => Outcome {
            exit_code: f.exit_code,
            document: f.document(),
        },
    }
}

/// Parses `args` (including the program name) and runs them. Usage errors
/// become exit code 2 with clap's message in the error document.
pub fn run_args<I, T>(args: I) -> std::result::Result<(Outcome, Option<PathBuf>), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    Ok((run(&cli), cli.output.clone()))
}
