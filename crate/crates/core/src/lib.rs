pub mod group;
pub mod kgpd;
pub mod linalg;
pub mod qfield;
pub mod torus;

/// Largest group the enumerators will materialize unless overridden.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

pub use torus::DEFAULT_FLAG_CAP;

/// Enumeration caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub order_cap: usize,
    pub flag_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            order_cap: DEFAULT_ORDER_CAP,
            flag_cap: DEFAULT_FLAG_CAP,
        }
    }
}
