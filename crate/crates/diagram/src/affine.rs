use crate::rat::Q;
use crate::DiagramError;
use partition_core::{Charge, Multipartition, Node};
use quiver_core::{Quiver, Residue};
use serde::{Deserialize, Serialize};

/// The charge extended to `l_hat = l + n(e+1)` components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineData {
    pub l: usize,
    pub n: u32,
    pub l_hat: usize,
    pub kappa_hat: Vec<i64>,
    pub rho_hat: Vec<Residue>,
    pub quiver: Quiver,
}

pub fn affine_extend(charge: &Charge, n: u32, q: &Quiver) -> AffineData {
    let l = charge.level();
    let ep = q.vertex_count() as usize;
    let l_hat = l + n as usize * ep;
    let kl = charge.kappa.last().copied().unwrap_or(0);
    let mut kappa_hat = Vec::with_capacity(l_hat);
    let mut rho_hat = Vec::with_capacity(l_hat);
    for m in 1..=l_hat {
        if m <= l {
            kappa_hat.push(charge.kappa[m - 1]);
            rho_hat.push(q.residue(charge.rho[m - 1]));
        } else {
            kappa_hat.push(kl + 2 * n as i64 * (m - l) as i64);
            rho_hat.push(q.residue(((m - l - 1) / n as usize) as i64));
        }
    }
    AffineData { l, n, l_hat, kappa_hat, rho_hat, quiver: *q }
}

impl AffineData {
    /// The perturbation `1/(4 n l_hat)`, with `n` read as 1 when it is 0.
    pub fn default_eps(&self) -> Q {
        Q::new(1, 4 * self.n.max(1) as i128 * self.l_hat as i128)
    }

    pub fn check_eps(&self, eps: Q) -> Result<(), DiagramError> {
        let bound = Q::new(1, 2 * self.n.max(1) as i128 * self.l_hat as i128);
        if eps <= Q::from_integer(0) || eps >= bound {
            return Err(DiagramError::EpsilonRange);
        }
        Ok(())
    }

    pub fn residue(&self, node: Node) -> Residue {
        self.quiver.residue(node.content() + self.rho_hat[node.m as usize - 1].0 as i64)
    }

    pub fn check_components(&self, lam: &Multipartition) -> Result<(), DiagramError> {
        if lam.level() > self.l_hat {
            return Err(DiagramError::TooManyComponents { got: lam.level(), max: self.l_hat });
        }
        Ok(())
    }

    /// `kappa_m + (c - r) - m/l_hat - (c + r) eps`.
    pub fn position(&self, node: Node, eps: Q) -> Q {
        let m = node.m as i128;
        Q::from_integer(self.kappa_hat[node.m as usize - 1] as i128 + node.content() as i128)
            - Q::new(m, self.l_hat as i128)
            - eps * Q::from_integer((node.c + node.r) as i128)
    }
}

/// Checked positioning function.
pub fn position(node: Node, aff: &AffineData, eps: Q) -> Result<Q, DiagramError> {
    aff.check_eps(eps)?;
    if node.m == 0 || node.m as usize > aff.l_hat {
        return Err(DiagramError::TooManyComponents { got: node.m as usize, max: aff.l_hat });
    }
    Ok(aff.position(node, eps))
}
