use crate::numthy::{NumError, OddPrimePower};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Base fields of characteristic not two handled by the engine.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FieldId {
    AlgClosed,
    Fq(OddPrimePower),
    /// q-adic numbers for an odd prime q
    Qq(OddPrimePower),
    Q2,
    R,
    /// the rationals, restricted to a finite set of odd primes (2 is always present)
    Q(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("q-adic fields need an odd prime, got {0}")]
    NotPrime(u64),
    #[error("support set must list odd primes, got {0}")]
    BadSupport(u32),
}

impl FieldId {
    pub fn fq(q: u64) -> Result<FieldId, FieldError> {
        Ok(FieldId::Fq(OddPrimePower::new(q)?))
    }

    pub fn qq(q: u64) -> Result<FieldId, FieldError> {
        let p = OddPrimePower::new(q)?;
        if !p.is_prime() {
            return Err(FieldError::NotPrime(q));
        }
        Ok(FieldId::Qq(p))
    }

    pub fn rationals(support: &[u32]) -> Result<FieldId, FieldError> {
        let mut v: Vec<u32> = Vec::new();
        for &p in support {
            if p == 2 {
                continue;
            }
            let ok = OddPrimePower::new(p as u64).map(|x| x.is_prime()).unwrap_or(false);
            if !ok {
                return Err(FieldError::BadSupport(p));
            }
            v.push(p);
        }
        v.sort_unstable();
        v.dedup();
        Ok(FieldId::Q(v))
    }

    /// The q for F_q and Q_q.
    pub fn q(&self) -> Option<OddPrimePower> {
        match self {
            FieldId::Fq(q) | FieldId::Qq(q) => Some(*q),
            _ => None,
        }
    }

    /// Odd primes of the support over Q.
    pub fn support(&self) -> &[u32] {
        match self {
            FieldId::Q(v) => v,
            _ => &[],
        }
    }

    pub fn short(&self) -> String {
        match self {
            FieldId::AlgClosed => "c".into(),
            FieldId::Fq(q) => format!("f{q}"),
            FieldId::Qq(q) => format!("q{q}"),
            FieldId::Q2 => "q2".into(),
            FieldId::R => "r".into(),
            FieldId::Q(s) => {
                let v: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                format!("q[{}]", v.join(","))
            }
        }
    }
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldId::AlgClosed => write!(f, "F̄"),
            FieldId::Fq(q) => write!(f, "F_{q}"),
            FieldId::Qq(q) => write!(f, "Q_{q}"),
            FieldId::Q2 => write!(f, "Q_2"),
            FieldId::R => write!(f, "R"),
            FieldId::Q(s) => {
                let v: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                write!(f, "Q{{2,{}}}", v.join(","))
            }
        }
    }
}
