//! Exact rationals and their JSON form `{"num": .., "den": ..}`.

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Q = Ratio<i128>;

#[derive(Serialize, Deserialize)]
struct Frac {
    num: i128,
    den: i128,
}

pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    Frac { num: *x.numer(), den: *x.denom() }.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
    let f = Frac::deserialize(d)?;
    if f.den == 0 {
        return Err(serde::de::Error::custom("zero denominator"));
    }
    Ok(Q::new(f.num, f.den))
}

pub mod vec {
    use super::{Frac, Q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Frac> = xs.iter().map(|x| Frac { num: *x.numer(), den: *x.denom() }).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        let v = Vec::<Frac>::deserialize(d)?;
        v.into_iter()
            .map(|f| if f.den == 0 { Err(serde::de::Error::custom("zero denominator")) } else { Ok(Q::new(f.num, f.den)) })
            .collect()
    }
}

/// Lossy conversion for rendering.
pub fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}
