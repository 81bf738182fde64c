//! Subgroup embeddings and class fusion.

use std::collections::HashMap;

use crate::caps;
use crate::error::{Error, Result};

use super::{ConjClassData, Elem, Group};

/// An embedded subgroup H <= G together with the map sending each
/// H-conjugacy class to the G-class containing its image.
#[derive(Clone, Debug)]
pub struct ClassFusion {
    pub subgroup: Group,
    pub h_classes: ConjClassData,
    /// H-class index -> G-class index.
    pub fusion: Vec<usize>,
    /// |G : H|.
    pub index: u64,
    /// H element -> its image in G.
    pub embed: HashMap<Elem, Elem>,
    /// G element -> its preimage, for elements in the image.
    pub embed_inv: HashMap<Elem, Elem>,
}

/// Build and verify a class fusion from an embedding defined on all of H.
///
/// The homomorphism property is checked exhaustively when |H|^2 is small
/// and on a deterministic sample otherwise; injectivity is always checked
/// in full.
pub fn build_fusion(
    g_group: &Group,
    g_classes: &ConjClassData,
    h_group: &Group,
    h_classes: &ConjClassData,
    embedding: impl Fn(&Elem) -> Elem,
) -> Result<ClassFusion> {
    if g_group.order() % h_group.order() != 0 {
        return Err(Error::Embedding(format!(
            "|H| = {} does not divide |G| = {}",
            h_group.order(),
            g_group.order()
        )));
    }
    let h_elems = h_group.enumerate()?;
    let mut embed = HashMap::with_capacity(h_elems.len());
    let mut embed_inv = HashMap::with_capacity(h_elems.len());
    for h in &h_elems {
        let img = embedding(h);
        if embed_inv.insert(img.clone(), h.clone()).is_some() {
            return Err(Error::Embedding("embedding is not injective".into()));
        }
        embed.insert(h.clone(), img);
    }
    if embed[&h_group.identity()] != g_group.identity() {
        return Err(Error::Embedding("identity does not map to identity".into()));
    }
    // homomorphism check
    let order = h_elems.len() as u64;
    let exhaustive = order.saturating_mul(order) <= caps::exhaustive_check_cap().saturating_mul(100);
    let verify = |a: &Elem, b: &Elem| -> Result<()> {
        let lhs = embed[&h_group.compose(a, b)].clone();
        let rhs = g_group.compose(&embed[a], &embed[b]);
        if lhs != rhs {
            return Err(Error::Embedding(format!(
                "not a homomorphism at {a:?} * {b:?}"
            )));
        }
        Ok(())
    };
    if exhaustive {
        for a in &h_elems {
            for b in &h_elems {
                verify(a, b)?;
            }
        }
    } else {
        let mut state = 0x12345678u64;
        for _ in 0..caps::exhaustive_check_cap() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = &h_elems[(state % order) as usize];
            let b = &h_elems[((state >> 32) % order) as usize];
            verify(a, b)?;
        }
    }
    // fusion map over H-classes
    let mut fusion = Vec::with_capacity(h_classes.len());
    for info in &h_classes.classes {
        let img = &embed[&info.rep];
        let g_class = g_classes.class_of(img).ok_or_else(|| {
            Error::Embedding(format!("image {img:?} not found in the parent group"))
        })?;
        fusion.push(g_class);
    }
    if fusion[0] != 0 {
        return Err(Error::Embedding("identity class does not fuse to the identity class".into()));
    }
    Ok(ClassFusion {
        subgroup: h_group.clone(),
        h_classes: h_classes.clone(),
        fusion,
        index: g_group.order() / h_group.order(),
        embed,
        embed_inv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugacy_classes, natural_action, Group, GroupSpec};

    /// The Klein four-group {e, (01)(23), (02)(13), (03)(12)} inside the
    /// symmetric group on four points, from tuple generators.
    pub fn klein4_embedding(h: &Elem) -> Elem {
        let g1 = [1u64, 0, 3, 2]; // (01)(23)
        let g2 = [2u64, 3, 0, 1]; // (02)(13)
        let mut img: Vec<u64> = (0..4).collect();
        let apply = |img: &mut Vec<u64>, gen: &[u64; 4]| {
            let composed: Vec<u64> = img.iter().map(|&i| gen[i as usize]).collect();
            *img = composed;
        };
        if h.0[0] == 1 {
            apply(&mut img, &g1);
        }
        if h.0[1] == 1 {
            apply(&mut img, &g2);
        }
        Elem(img)
    }

    #[test]
    fn klein4_into_s4() {
        let g = Group::new(GroupSpec::Symmetric { n: 4 }).unwrap();
        let gc = conjugacy_classes(&g).unwrap();
        let h = Group::new(GroupSpec::AbelianProduct { orders: vec![2, 2] }).unwrap();
        let hc = conjugacy_classes(&h).unwrap();
        let fusion = build_fusion(&g, &gc, &h, &hc, klein4_embedding).unwrap();
        assert_eq!(fusion.index, 6);
        // the three involutions all fuse into the single double-transposition
        // class, verified against exhaustive conjugation inside S_4
        let nontrivial: Vec<usize> = fusion.fusion[1..].to_vec();
        assert!(nontrivial.iter().all(|&c| c == nontrivial[0]));
        assert_eq!(gc.classes[nontrivial[0]].size, 3);
        assert_eq!(gc.classes[nontrivial[0]].element_order, 2);
        // fusion consistency on every element of H
        for (h_el, img) in &fusion.embed {
            let hc_idx = hc.class_of(h_el).unwrap();
            assert_eq!(gc.class_of(img).unwrap(), fusion.fusion[hc_idx]);
        }
    }

    #[test]
    fn alternating_into_symmetric() {
        let g = Group::new(GroupSpec::Symmetric { n: 4 }).unwrap();
        let gc = conjugacy_classes(&g).unwrap();
        let h = Group::new(GroupSpec::Alternating { n: 4 }).unwrap();
        let hc = conjugacy_classes(&h).unwrap();
        let fusion = build_fusion(&g, &gc, &h, &hc, |e| e.clone()).unwrap();
        assert_eq!(fusion.index, 2);
    }

    #[test]
    fn center_into_heisenberg() {
        for (p, n) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let g = Group::new(GroupSpec::Heisenberg { p, n }).unwrap();
            let gc = conjugacy_classes(&g).unwrap();
            let h = Group::new(GroupSpec::AbelianProduct { orders: vec![p] }).unwrap();
            let hc = conjugacy_classes(&h).unwrap();
            let fusion = build_fusion(&g, &gc, &h, &hc, |z| {
                let mut triple = vec![0u64; 2 * n as usize + 1];
                triple[2 * n as usize] = z.0[0];
                Elem(triple)
            })
            .unwrap();
            assert_eq!(fusion.index, p.pow(2 * n));
        }
    }

    #[test]
    fn rejects_non_homomorphism() {
        let g = Group::new(GroupSpec::Symmetric { n: 4 }).unwrap();
        let gc = conjugacy_classes(&g).unwrap();
        let h = Group::new(GroupSpec::AbelianProduct { orders: vec![2, 2] }).unwrap();
        let hc = conjugacy_classes(&h).unwrap();
        // map a generator to a 4-cycle: orders no longer match
        let bad = build_fusion(&g, &gc, &h, &hc, |e| {
            if e.0 == vec![1, 0] {
                Elem(vec![1, 2, 3, 0])
            } else {
                klein4_embedding(e)
            }
        });
        assert!(matches!(bad, Err(Error::Embedding(_))));
    }

    #[test]
    fn rejects_non_injective() {
        let g = Group::new(GroupSpec::Symmetric { n: 4 }).unwrap();
        let gc = conjugacy_classes(&g).unwrap();
        let h = Group::new(GroupSpec::AbelianProduct { orders: vec![2, 2] }).unwrap();
        let hc = conjugacy_classes(&h).unwrap();
        let bad = build_fusion(&g, &gc, &h, &hc, |_| g.identity());
        assert!(matches!(bad, Err(Error::Embedding(_))));
    }

    #[test]
    fn natural_action_is_compatible_with_fusion_subgroups() {
        // smoke test tying the pieces together on the dihedral group
        let g = Group::new(GroupSpec::Dihedral { n: 6 }).unwrap();
        natural_action(&g).unwrap().check().unwrap();
    }
}
