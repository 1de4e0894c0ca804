use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "fuchsian", version, about = "Exact invariants of Fuchsian singularities and their frame shapes")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Poincaré series of a weight system or a Fuchsian signature.
    Poincare(PoincareArgs),
    /// psi_A, phi_A and, for tabulated records, phi_A~ and phi_M^b.
    Phi(SigArgs),
    /// Saito dual of a frame shape.
    Dual(DualArgs),
    /// Monodromy characteristic polynomial phi_M.
    Monodromy(MonodromyArgs),
    /// Characteristic polynomial of a Coxeter element.
    Coxeter(CoxeterArgs),
    /// Enumerate the complete-intersection signatures case by case.
    Classify,
    /// Re-derive a table, or run every acceptance criterion.
    Verify(VerifyArgs),
    /// List the frame shapes produced by the five constructions.
    Moonshine(MoonshineArgs),
    /// q-expansion of the eta product of a frame shape.
    Eta(EtaArgs),
}

#[derive(Args, Debug)]
pub struct PoincareArgs {
    #[arg(long, requires = "degrees", conflicts_with = "sig")]
    pub weights: Option<String>,
    #[arg(long)]
    pub degrees: Option<String>,
    /// Signature `g;a1,...,ar`.
    #[arg(long, required_unless_present = "weights")]
    pub sig: Option<String>,
    #[arg(long, default_value_t = 256)]
    pub terms: usize,
}

#[derive(Args, Debug)]
pub struct SigArgs {
    /// Signature `g;a1,...,ar` with optional `(h)`/`(nh)`, or a tabulated name.
    #[arg(long)]
    pub sig: String,
}

#[derive(Args, Debug)]
pub struct DualArgs {
    #[arg(long)]
    pub pi: String,
    /// Duality modulus; defaults to the order of the shape.
    #[arg(long)]
    pub h: Option<u64>,
}

#[derive(Args, Debug)]
pub struct MonodromyArgs {
    #[arg(long, requires = "degrees", conflicts_with = "sig")]
    pub weights: Option<String>,
    #[arg(long)]
    pub degrees: Option<String>,
    #[arg(long, required_unless_present = "weights")]
    pub sig: Option<String>,
}

#[derive(Args, Debug)]
pub struct CoxeterArgs {
    #[arg(long, required_unless_present = "ade", conflicts_with = "ade")]
    pub sig: Option<String>,
    /// Root system such as `A5`, `D4` or `E8`.
    #[arg(long)]
    pub ade: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableSel {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
    #[value(name = "5")]
    Five,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = TableSel::All)]
    pub table: TableSel,
    #[arg(long, default_value_t = 256)]
    pub terms: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionSel {
    A,
    B,
    C,
    D,
    E,
    All,
}

#[derive(Args, Debug)]
pub struct MoonshineArgs {
    #[arg(long, value_enum, default_value_t = ConstructionSel::All)]
    pub construction: ConstructionSel,
}

#[derive(Args, Debug)]
pub struct EtaArgs {
    #[arg(long)]
    pub pi: String,
    #[arg(long, default_value_t = 256)]
    pub terms: usize,
}
