use super::problem::{BilinearProblem, Symmetry};
use super::{BracketTensor, HomError};
use crate::exactla::Equation;
use crate::hcpair::{EvenAlgebra, HcError};
use crate::rep::WeightModule;

/// Extra linear conditions on a searched bracket.
#[derive(Clone, Debug)]
pub enum BracketConstraint {
    /// [e_i, e_j] equals the value of the given tensor for each listed pair.
    Fixed { pairs: Vec<(usize, usize)>, values: BracketTensor },
    /// There is one scalar lambda with [e_i, e_j] = lambda * template[e_i, e_j] on all listed pairs.
    Proportional { pairs: Vec<(usize, usize)>, template: BracketTensor },
}

/// Affine space of bracket tensors: particular + span(directions), or empty.
#[derive(Clone, Debug)]
pub struct BracketSpace {
    pub particular: Option<BracketTensor>,
    pub directions: Vec<BracketTensor>,
}

impl BracketSpace {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    /// Dimension of the affine space, None when empty.
    pub fn dim(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.directions.len())
    }

    /// Every element is particular + sum of directions; the listed tensors generate the space.
    pub fn generators(&self) -> Vec<BracketTensor> {
        let mut out: Vec<BracketTensor> = self.particular.iter().cloned().collect();
        out.extend(self.directions.iter().cloned());
        out
    }
}

/// All symmetric, equivariant brackets m x m -> even whose cubic identities vanish,
/// subject to the given constraints.
pub fn bracket_search(
    even: &EvenAlgebra,
    m: &WeightModule,
    constraints: &[BracketConstraint],
) -> Result<BracketSpace, HcError> {
    let rho = even.module_action(m)?;
    let mut problem = BilinearProblem::new(m, m, even.adjoint(), Symmetry::Symmetric)?;
    problem.extra = constraints.iter().filter(|c| matches!(c, BracketConstraint::Proportional { .. })).count();
    let mut sys = problem.system();
    problem.add_equivariance(&mut sys);
    problem.add_cubic(&mut sys, &rho);
    let mut aux = problem.ntensor_vars();
    for c in constraints {
        match c {
            BracketConstraint::Fixed { pairs, values } => {
                for &(i, j) in pairs {
                    for x in 0..even.dim() {
                        let rhs = values.get(i, j, x).clone();
                        let terms = problem.var(i, j, x).map(|(v, s)| vec![(v, s)]).unwrap_or_default();
                        sys.add(&Equation { terms, rhs: Some(rhs) });
                    }
                }
            }
            BracketConstraint::Proportional { pairs, template } => {
                for &(i, j) in pairs {
                    for x in 0..even.dim() {
                        let mut terms = problem.var(i, j, x).map(|(v, s)| vec![(v, s)]).unwrap_or_default();
                        let t = template.get(i, j, x);
                        if !t.is_zero() {
                            terms.push((aux, -t));
                        }
                        if !terms.is_empty() {
                            sys.add_homogeneous(terms);
                        }
                    }
                }
                aux += 1;
            }
        }
    }
    let sol = sys.solve();
    Ok(BracketSpace {
        particular: sol.particular.as_ref().map(|p| problem.tensor_from(p)),
        directions: problem.span_tensors(&sol.directions),
    })
}

impl From<HomError> for HcError {
    fn from(e: HomError) -> Self {
        HcError::Hom(e.to_string())
    }
}
