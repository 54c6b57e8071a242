//! Float-method shim: inherent `f64` methods under std, `num_traits::Float`
//! (backed by libm) otherwise. Modules import `crate::fmath::Float`.

#[allow(unused_imports)]
pub use num_traits::Float;
