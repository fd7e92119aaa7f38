//! Search-space limits.
//!
//! Every exhaustive scan in the crate consults a [`Guards`] value and refuses
//! with [`Error::GuardExceeded`](crate::Error::GuardExceeded) instead of
//! running for an unpredictable time. Defaults can be overridden through
//! environment variables (see [`Guards::from_env`]).

use std::env;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest `target.n ^ source.n` for homomorphism enumeration.
    pub hom_space: u128,
    /// Largest number of search nodes visited while enumerating algebras.
    pub table_search: u128,
    /// Largest carrier size accepted by algebra enumeration.
    pub max_search_size: usize,
    /// Largest carrier (in elements) for the `2^n` filter scan; also caps upset scans.
    pub filter_scan_bits: usize,
    /// Largest number of elements in a free extension.
    pub closure_elements: usize,
    /// Random upsets drawn per sampled property.
    pub samples: usize,
    pub seed: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            hom_space: 10_000_000,
            table_search: 100_000_000,
            max_search_size: 5,
            filter_scan_bits: 16,
            closure_elements: 1_000_000,
            samples: 1000,
            seed: 0x5eed_f00d,
        }
    }
}

fn read<T: std::str::FromStr>(key: &str) -> Option<T> {
    env::var(key).ok().and_then(|v| v.trim().parse().ok())
}

impl Guards {
    /// Defaults overridden by `FRONTAL_HOM_LIMIT`, `FRONTAL_TABLE_LIMIT`,
    /// `FRONTAL_MAX_SIZE`, `FRONTAL_FILTER_BITS`, `FRONTAL_CLOSURE_LIMIT`,
    /// `FRONTAL_SAMPLES` and `FRONTAL_SEED`. Unparsable values are ignored.
    pub fn from_env() -> Self {
        let d = Guards::default();
        Guards {
            hom_space: read("FRONTAL_HOM_LIMIT").unwrap_or(d.hom_space),
            table_search: read("FRONTAL_TABLE_LIMIT").unwrap_or(d.table_search),
            max_search_size: read("FRONTAL_MAX_SIZE").unwrap_or(d.max_search_size),
            filter_scan_bits: read("FRONTAL_FILTER_BITS").unwrap_or(d.filter_scan_bits),
            closure_elements: read("FRONTAL_CLOSURE_LIMIT").unwrap_or(d.closure_elements),
            samples: read("FRONTAL_SAMPLES").unwrap_or(d.samples),
            seed: read("FRONTAL_SEED").unwrap_or(d.seed),
        }
    }
}
