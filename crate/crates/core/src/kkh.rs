//! Khovanov–Kauffman homology: the direct sum of the Khovanov homologies of
//! the links in a graph's Kauffman family.

use sha2::{Digest, Sha256};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::homology::GradedDims;
use crate::kauffman::{family_members, FamilyOptions, GraphDiagram};
use crate::oracle::euler_characteristic;
use crate::poly::LaurentPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KKhMember {
    /// Stable content hash of the member's canonical PD code.
    pub id: String,
    pub choice: String,
    pub link: LinkDiagram,
    pub dims: GradedDims,
    pub euler: LaurentPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KKhResult {
    pub members: Vec<KKhMember>,
    pub total: GradedDims,
    pub total_euler: LaurentPolynomial,
}

/// First 16 hex digits of the SHA-256 of the canonical PD code.
pub fn member_id(d: &LinkDiagram) -> String {
    let digest = Sha256::digest(d.canonical().to_pd_string().as_bytes());
    hex::encode(&digest[..8])
}

pub fn kkh(g: &GraphDiagram, dedupe: bool) -> Result<KKhResult> {
    kkh_with(
        g,
        &FamilyOptions {
            dedupe,
            ..FamilyOptions::default()
        },
    )
}

/// Empty family members (every strand discarded) contribute nothing and
/// are left out of the member list in both modes.
pub fn kkh_with(g: &GraphDiagram, opts: &FamilyOptions) -> Result<KKhResult> {
    let opts = FamilyOptions {
        compute_dims: true,
        ..*opts
    };
    let members: Vec<KKhMember> = family_members(g, &opts)?
        .into_iter()
        .filter(|m| m.link.component_count() > 0)
        .map(|m| {
            let dims = m
                .dims
                .ok_or_else(|| Error::CorruptComplex("member homology missing".into()))?;
            Ok(KKhMember {
                id: member_id(&m.link),
                choice: m.choice.describe(g),
                euler: euler_characteristic(&dims),
                link: m.link,
                dims,
            })
        })
        .collect::<Result<_>>()?;
    let total = members
        .iter()
        .fold(GradedDims::new(), |acc, m| acc.direct_sum(&m.dims));
    let total_euler = members.iter().map(|m| m.euler.clone()).sum();
    Ok(KKhResult {
        members,
        total,
        total_euler,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kauffman::parse_graph;

    #[test]
    fn theta_is_an_unknot() {
        let g = parse_graph("V(1,2,3) V(3,2,1)").unwrap();
        let r = kkh(&g, true).unwrap();
        assert_eq!(r.members.len(), 1);
        assert_eq!(r.total, GradedDims::from_iter([((0, 1), 1), ((0, -1), 1)]));
        assert_eq!(r.total_euler, LaurentPolynomial::circle());

        let multi = kkh(&g, false).unwrap();
        assert_eq!(multi.members.len(), 3);
        assert_eq!(multi.total_euler, LaurentPolynomial::circle().shift(0) * LaurentPolynomial::monomial(3, 0));
    }

    #[test]
    fn ids_are_stable() {
        let a = crate::diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let b = crate::diagram::parse_pd("X(3,6,4,1) X(5,2,6,3) X(1,4,2,5)").unwrap();
        assert_eq!(member_id(&a), member_id(&b));
        assert_eq!(member_id(&a).len(), 16);
        assert_ne!(member_id(&a), member_id(&LinkDiagram::unknot()));
    }

    #[test]
    fn member_cap() {
        // a vertex sitting on a closed 3-crossing strand
        let g = parse_graph("X(1,4,2,5) X(3,6,4,7) X(5,2,6,3) V(7,1)").unwrap();
        let opts = FamilyOptions {
            cap: 2,
            ..FamilyOptions::default()
        };
        match kkh_with(&g, &opts) {
            Err(Error::MemberCapExceeded { choice, crossings: 3, cap: 2 }) => {
                assert_eq!(choice, "v1:{7,1}");
            }
            other => panic!("{other:?}"),
        }
    }
}
