use crate::CliError;
use cyclohecke::group::GroupParams;
use cyclohecke::hecke::Hecke;
use cyclohecke::rings::{Cyclotomic, Laurent, RatFunc, Rational, Ring, Specialization};

/// A Hecke algebra over whichever coefficient ring the flags select.
pub enum Algebra {
    Rational(Hecke<Rational>),
    Cyclotomic(Hecke<Cyclotomic>),
    Laurent(Hecke<Laurent>),
    Fraction(Hecke<RatFunc>),
}

/// Runs a generic body against the algebra inside.
#[macro_export]
macro_rules! with_algebra {
    ($alg:expr, $h:ident => $body:expr) => {
        match $alg {
            $crate::algebra::Algebra::Rational($h) => $body,
            $crate::algebra::Algebra::Cyclotomic($h) => $body,
            $crate::algebra::Algebra::Laurent($h) => $body,
            $crate::algebra::Algebra::Fraction($h) => $body,
        }
    };
}

#[derive(Clone, Debug, Default, clap::Args)]
pub struct RingArgs {
    /// Coefficient ring: Q (ξ=2, Q_l=100^(l-1)), cyclo:E (ξ=ζ_E, Q_l=ζ_E^κ_l),
    /// laurent or fraction (generic parameters).
    #[arg(long, default_value = "Q")]
    pub ring: String,
    /// Rational specialization "xi=V,Q=V1,...,Vr"; overrides --ring.
    #[arg(long)]
    pub spec: Option<String>,
    /// κ for cyclo:E, comma separated; defaults to 0,1,...,r-1.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub kappa: Option<Vec<i64>>,
}

impl RingArgs {
    pub fn describe(&self) -> String {
        match &self.spec {
            Some(s) => s.clone(),
            None => self.ring.clone(),
        }
    }

    pub fn kappa_or_default(&self, r: usize) -> Vec<i64> {
        self.kappa.clone().unwrap_or_else(|| (0..r as i64).collect())
    }

    pub fn build(&self, p: GroupParams) -> Result<Algebra, CliError> {
        let usage = |m: String| CliError::Usage(m);
        if let Some(s) = &self.spec {
            let sp = Specialization::parse(s).map_err(|e| usage(e.to_string()))?;
            if sp.q.len() != p.r as usize {
                return Err(usage(format!("--spec gives {} values of Q, expected {}", sp.q.len(), p.r)));
            }
            return Ok(Algebra::Rational(
                Hecke::new(p, sp.xi, sp.q).map_err(|e| usage(e.to_string()))?,
            ));
        }
        let ring = self.ring.as_str();
        if ring.eq_ignore_ascii_case("q") {
            return Ok(Algebra::Rational(Hecke::default_semisimple(p)));
        }
        if ring == "laurent" {
            return Ok(Algebra::Laurent(Hecke::generic(p)));
        }
        if ring == "fraction" {
            return Ok(Algebra::Fraction(Hecke::generic_field(p)));
        }
        if let Some(e) = ring.strip_prefix("cyclo:") {
            let e: u32 = e.parse().map_err(|_| usage(format!("bad conductor in '{ring}'")))?;
            if e < 2 {
                return Err(usage("cyclo:E needs E >= 2".into()));
            }
            let z = Cyclotomic::zeta(e);
            let kappa = self.kappa_or_default(p.r as usize);
            if kappa.len() != p.r as usize {
                return Err(usage(format!("--kappa needs {} entries", p.r)));
            }
            let q = kappa.iter().map(|&k| z.zeta_pow(k)).collect();
            return Ok(Algebra::Cyclotomic(Hecke::new(p, z, q).map_err(|e| usage(e.to_string()))?));
        }
        Err(usage(format!("unknown ring '{ring}'")))
    }
}

/// ξ and Q for the report header.
pub fn parameter_strings<R: Ring>(h: &Hecke<R>) -> (String, Vec<String>) {
    (h.xi.to_string(), h.q.iter().map(|q| q.to_string()).collect())
}
