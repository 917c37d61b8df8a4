//! Cocycle values as explicit factor sequences.
//!
//! `C_{gh}(p) = C_g(p) C_h(g^{-1} p)` reduces every value to the generators:
//! `C_{(s_i,e)}(t,γ) = R_i(t_i/t_{i+1})`, `C_{(π,e)}(t,γ) = η(π)(γ)`,
//! `C_{(e,w)}(t,γ) = C_ι C_{(w,e)}(γ^{-1},t^{-1}) C_ι` and `C_ι` itself.

use super::eval::CocycleEval;
use super::CocycleError;
use crate::hecke::HeckeMatrix;
use crate::weyl::{
    act_affine, factored_word, Coord, DoubleElt, ExtAffineElt, Letter, TorusMonomialPoint, TorusPoint, Word,
};

#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    /// `R_i(z)`.
    R { i: usize, z: Coord },
    /// `η(π)(γ)` with the given coordinates.
    Pi(Vec<Coord>),
    /// `η(π)(γ)^{-1}`; the coordinates are already inverted.
    PiInv(Vec<Coord>),
}

/// A product of steps, optionally conjugated by `C_ι`.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub conj: bool,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CocycleProgram {
    pub n: usize,
    /// Left factor `C_ι` (from an `ι` in the group element).
    pub iota: bool,
    pub blocks: Vec<Block>,
}

/// Walk a word for `(w, e)` from the point `t`; `γ` is never moved.
fn left_steps(word: &Word, t: &TorusMonomialPoint, gamma: &TorusMonomialPoint) -> Vec<Step> {
    let n = t.n();
    let mut t = t.clone();
    let mut steps = Vec::new();
    let pi = ExtAffineElt::pi(n);
    let pi_inv = pi.inverse();
    for l in &word.without_affine_reflection(n).0 {
        match *l {
            Letter::S(i) => {
                steps.push(Step::R { i, z: t.coords[i - 1].div(&t.coords[i]) });
                t = t.permute(&crate::weyl::Perm::s(n, i));
            }
            Letter::Pi(m) if m > 0 => {
                for _ in 0..m {
                    steps.push(Step::Pi(gamma.coords.clone()));
                    t = act_affine(&pi_inv, &t);
                }
            }
            Letter::Pi(m) => {
                for _ in 0..-m {
                    steps.push(Step::PiInv(gamma.invert().coords));
                    t = act_affine(&pi, &t);
                }
            }
        }
    }
    steps
}

impl CocycleProgram {
    /// The program for `ι^a (w, w')` along the given words for `w` and `w'`.
    pub fn for_words(
        iota: bool,
        left: &Word,
        right: &Word,
        t: &TorusMonomialPoint,
        gamma: &TorusMonomialPoint,
    ) -> Self {
        let n = t.n();
        let (t1, g1) = if iota { (gamma.invert(), t.invert()) } else { (t.clone(), gamma.clone()) };
        let mut blocks = Vec::new();
        let ls = left_steps(left, &t1, &g1);
        if !ls.is_empty() {
            blocks.push(Block { conj: false, steps: ls });
        }
        // C_{(e,w')}(w^{-1} t, γ) = C_ι C_{(w',e)}(γ^{-1}, (w^{-1}t)^{-1}) C_ι
        let winv = left.evaluate(n).inverse();
        let t2 = act_affine(&winv, &t1);
        let rs = left_steps(right, &g1.invert(), &t2.invert());
        if !rs.is_empty() {
            blocks.push(Block { conj: true, steps: rs });
        }
        CocycleProgram { n, iota, blocks }
    }

    /// The program for a group element using [`factored_word`] on each side.
    pub fn new(g: &DoubleElt, t: &TorusMonomialPoint, gamma: &TorusMonomialPoint) -> Self {
        Self::for_words(g.iota, &factored_word(&g.left), &factored_word(&g.right), t, gamma)
    }

    pub fn r_steps(&self) -> impl Iterator<Item = (usize, &Step)> {
        self.blocks.iter().flat_map(|b| b.steps.iter()).enumerate().filter(|(_, s)| matches!(s, Step::R { .. }))
    }

    pub fn evaluate<E: CocycleEval>(&self, ev: &E) -> Result<HeckeMatrix<E::C>, CocycleError> {
        let p = ev.params();
        let mut acc: Option<HeckeMatrix<E::C>> = None;
        let mut idx = 0usize;
        for b in &self.blocks {
            let mut m = HeckeMatrix::identity(self.n);
            for s in &b.steps {
                match s {
                    Step::R { i, z } => {
                        let r = ev.r_coeff(z).map_err(|e| e.at_step(idx, *i))?;
                        m.right_mul_r(*i, &r, p);
                    }
                    Step::Pi(g) => {
                        let v = g.iter().map(|c| ev.coord(c)).collect::<Result<Vec<_>, _>>()?;
                        m.right_mul_eta_pi(&v);
                    }
                    Step::PiInv(g) => {
                        let v = g.iter().map(|c| ev.coord(c)).collect::<Result<Vec<_>, _>>()?;
                        m.right_mul_eta_pi_inv(&v);
                    }
                }
                idx += 1;
            }
            if b.conj {
                m = m.c_iota();
            }
            acc = Some(match acc {
                None => m,
                Some(a) => a.mul(&m),
            });
        }
        let m = acc.unwrap_or_else(|| HeckeMatrix::identity(self.n));
        Ok(if self.iota { m.iota_left() } else { m })
    }
}
