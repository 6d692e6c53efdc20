//! Kernels of maps from a free module into a direct sum of quotients
//! `⊕ G_b / N_b`, where the degree shift of each block is read off from
//! the images.

use mlog_kernel::ops::{self, Elimination};
use mlog_kernel::{FreeModule, KernelError, Vector};

use crate::error::Result;

/// One block `G / N` of the target with the images of the source basis.
#[derive(Clone, Debug)]
pub struct Block {
    pub target: FreeModule,
    pub images: Vec<Vector>,
    pub modulo: Vec<Vector>,
}

impl Block {
    pub fn new(target: &FreeModule, images: Vec<Vector>, modulo: Vec<Vector>) -> Self {
        Block {
            target: target.clone(),
            images,
            modulo,
        }
    }

    /// The shift `s` with `deg image_j = twist_j + s`, or `None` if all
    /// images vanish.
    fn shift(&self, source: &FreeModule) -> Result<Option<i64>> {
        let mut shift = None;
        for (j, img) in self.images.iter().enumerate() {
            let Some(d) = self.target.degree_of(img)? else {
                continue;
            };
            let s = d - source.twists()[j];
            match shift {
                None => shift = Some(s),
                Some(t) if t != s => {
                    return Err(KernelError::NotHomogeneous(format!(
                        "block images shift degrees by both {t} and {s}"
                    ))
                    .into())
                }
                _ => {}
            }
        }
        Ok(shift)
    }
}

struct Assembled {
    target: FreeModule,
    images: Vec<Vector>,
    modulo: Vec<Vector>,
}

fn assemble(source: &FreeModule, blocks: &[Block]) -> Result<Assembled> {
    let ring = source.ring();
    let mut used = Vec::new();
    for b in blocks {
        if b.images.len() != source.rank() {
            return Err(KernelError::AmbientMismatch(format!(
                "{} images for a source of rank {}",
                b.images.len(),
                source.rank()
            ))
            .into());
        }
        if let Some(s) = b.shift(source)? {
            used.push((b, s));
        }
    }
    let mut target = FreeModule::new(ring, Vec::new());
    for (b, s) in &used {
        target = target.sum(&b.target.shifted(-s));
    }
    let total = target.rank();
    let mut images = vec![Vector::zero(total); source.rank()];
    let mut modulo = Vec::new();
    let mut offset = 0;
    for (b, _) in &used {
        let r = b.target.rank();
        for (j, img) in b.images.iter().enumerate() {
            for t in 0..r {
                if !img.comp(t).is_zero() {
                    *images[j].comp_mut(offset + t) = img.comp(t).clone();
                }
            }
        }
        for m in &b.modulo {
            let mut v = Vector::zero(total);
            for t in 0..r {
                *v.comp_mut(offset + t) = m.comp(t).clone();
            }
            modulo.push(v);
        }
        offset += r;
    }
    Ok(Assembled {
        target,
        images,
        modulo,
    })
}

/// Kernel of `source → ⊕ blocks`; the whole source if every image is zero.
pub fn kernel(source: &FreeModule, blocks: &[Block]) -> Result<Vec<Vector>> {
    let a = assemble(source, blocks)?;
    if a.target.rank() == 0 {
        return Ok(source.basis_vectors());
    }
    Ok(ops::kernel(source, &a.target, &a.images, &a.modulo)?)
}

/// Solves `φ(x) ≡ w` for a single block `φ: source → target / modulo`,
/// where `w` has degree `shift` more than the result.
pub fn lift(source: &FreeModule, block: &Block, w: &Vector, shift: i64) -> Result<Option<Vector>> {
    let target = block.target.shifted(-shift);
    let e = Elimination::new(source, &target, &block.images, &block.modulo)?;
    Ok(e.lift(w)?)
}
