//! Bundled example algebras.

use num_traits::Zero;

use crate::algebra::{default_labels, BolAlgebra};
use crate::error::{BolError, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{int, Scalar};

/// Names accepted by [`by_name`], in canonical spelling.
pub const NAMES: [&str; 10] = [
    "abelian1", "abelian2", "abelian3", "abelian4", "solv2", "heis3bol", "sl2bol", "so3bol",
    "lts_sl2", "mixed",
];

/// The Bol algebra of a Lie algebra: `x · y = [x, y]` and
/// `(x, y, z) = [z, [x, y]]`.
pub fn lie_type(lie: &LieAlgebra, name: &str) -> BolAlgebra {
    let m = lie.dim();
    let mut b = BolAlgebra::with_labels(name, lie.labels().to_vec());
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                b.set_binary_raw(i, j, k, lie.bracket_coeff(i, j, k).clone());
                for l in 0..m {
                    let mut s = Scalar::zero();
                    for p in 0..m {
                        s += lie.bracket_coeff(i, j, p) * lie.bracket_coeff(k, p, l);
                    }
                    b.set_ternary_raw(i, j, k, l, s);
                }
            }
        }
    }
    b
}

/// The Lie triple system of a Lie algebra: zero binary product and
/// `(x, y, z) = [[x, y], z]`.
pub fn lts_of(lie: &LieAlgebra, name: &str) -> BolAlgebra {
    let m = lie.dim();
    let mut b = BolAlgebra::with_labels(name, lie.labels().to_vec());
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let mut s = Scalar::zero();
                    for p in 0..m {
                        s += lie.bracket_coeff(i, j, p) * lie.bracket_coeff(p, k, l);
                    }
                    b.set_ternary_raw(i, j, k, l, s);
                }
            }
        }
    }
    b
}

pub fn abelian(n: usize) -> BolAlgebra {
    BolAlgebra::with_labels(format!("abelian{n}"), default_labels(n))
}

/// `e0 · e1 = e0`, zero ternary product.
pub fn solv2() -> BolAlgebra {
    let mut b = BolAlgebra::zero("solv2", 2);
    b.set_binary(0, 1, 0, int(1));
    b
}

pub fn heis3bol() -> BolAlgebra {
    lie_type(&LieAlgebra::heis3(), "heis3bol")
}

pub fn sl2bol() -> BolAlgebra {
    lie_type(&LieAlgebra::sl2(), "sl2bol")
}

pub fn so3bol() -> BolAlgebra {
    lie_type(&LieAlgebra::so3(), "so3bol")
}

pub fn lts_sl2() -> BolAlgebra {
    lts_of(&LieAlgebra::sl2(), "lts_sl2")
}

/// `sl2bol ⊕ solv2`.
pub fn mixed() -> BolAlgebra {
    sl2bol().direct_sum(&solv2()).renamed("mixed")
}

/// Looks up a catalog entry; `abelian_N` is accepted for `abelianN`.
pub fn by_name(name: &str) -> Result<BolAlgebra> {
    let key = name.replace("abelian_", "abelian");
    let b = match key.as_str() {
        "abelian1" => abelian(1),
        "abelian2" => abelian(2),
        "abelian3" => abelian(3),
        "abelian4" => abelian(4),
        "solv2" => solv2(),
        "heis3bol" => heis3bol(),
        "sl2bol" => sl2bol(),
        "so3bol" => so3bol(),
        "lts_sl2" => lts_sl2(),
        "mixed" => mixed(),
        _ => return Err(BolError::UnknownCatalog(name.to_string())),
    };
    Ok(b)
}

pub fn all() -> Vec<BolAlgebra> {
    NAMES
        .iter()
        .map(|n| by_name(n).expect("catalog names resolve"))
        .collect()
}
