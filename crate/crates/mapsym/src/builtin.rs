//! The named operations: identity, dual, ambo, truncate and friends.
//!
//! Base patches are specified as bordered chamber complexes and assembled;
//! everything else is derived through composition and the dual conjugates,
//! so e.g. zip is literally truncate∘dual and expand is ambo∘ambo. The two
//! inflation-6 operations without a compositional identity (o6a, o6d) carry
//! their chamber complexes directly; `enumerate` re-derives them and the
//! tests pin them against the complete catalogue of their inflation class.

use crate::complex::PatchComplex;
use crate::goldberg;
use crate::patch::{OperationPatch, PatchError};

fn assemble(
    adj: Vec<[Option<usize>; 3]>,
    specials: [(usize, usize); 3],
) -> Result<OperationPatch, PatchError> {
    let raw = PatchComplex { adj }.assemble(specials)?;
    OperationPatch::validate(raw).map_err(PatchError::Invalid)
}

pub(crate) fn identity_patch() -> OperationPatch {
    assemble(vec![[None, None, None]], [(0, 0), (0, 1), (0, 2)]).expect("identity patch")
}

pub(crate) fn dual_patch() -> OperationPatch {
    assemble(vec![[None, None, None]], [(0, 2), (0, 1), (0, 0)]).expect("dual patch")
}

pub(crate) fn ambo_patch() -> OperationPatch {
    assemble(
        vec![[None, None, Some(1)], [None, None, Some(0)]],
        [(0, 2), (0, 0), (1, 2)],
    )
    .expect("ambo patch")
}

pub(crate) fn truncate_patch() -> OperationPatch {
    assemble(
        vec![
            [None, None, Some(1)],
            [None, Some(2), Some(0)],
            [None, Some(1), None],
        ],
        [(0, 2), (2, 1), (1, 2)],
    )
    .expect("truncate patch")
}

pub(crate) fn loft_patch() -> OperationPatch {
    assemble(
        vec![
            [None, Some(1), None],
            [Some(2), Some(0), None],
            [Some(1), Some(3), None],
            [None, Some(2), Some(4)],
            [None, None, Some(3)],
        ],
        [(0, 0), (0, 1), (4, 2)],
    )
    .expect("loft patch")
}

pub(crate) fn quinto_patch() -> OperationPatch {
    assemble(
        vec![
            [Some(1), None, None],
            [Some(0), Some(2), None],
            [Some(3), Some(1), None],
            [Some(2), Some(4), None],
            [None, Some(3), Some(5)],
            [None, None, Some(4)],
        ],
        [(0, 0), (1, 0), (5, 2)],
    )
    .expect("quinto patch")
}

/// The inflation-6 operation whose results have vertex degrees 3 and 6
/// only. Chamber complex taken from the exhaustive inflation-6 catalogue;
/// the `catalogue` integration tests re-derive it.
pub(crate) fn o6a_patch() -> OperationPatch {
    assemble(
        vec![
            [Some(5), Some(1), None],
            [None, Some(0), Some(2)],
            [None, None, Some(1)],
            [None, None, Some(4)],
            [None, Some(5), Some(3)],
            [Some(0), Some(4), None],
        ],
        [(2, 2), (0, 0), (3, 2)],
    )
    .expect("o6a patch")
}

/// The inflation-6 operation whose v0-class vertices lie only in
/// quadrangles while the v2-class faces are at least hexagons. Chamber
/// complex taken from the exhaustive inflation-6 catalogue.
pub(crate) fn o6d_patch() -> OperationPatch {
    assemble(
        vec![
            [Some(2), None, Some(1)],
            [Some(3), None, Some(0)],
            [Some(0), Some(4), Some(3)],
            [Some(1), None, Some(2)],
            [Some(5), Some(2), None],
            [Some(4), None, None],
        ],
        [(5, 0), (0, 0), (1, 2)],
    )
    .expect("o6d patch")
}

/// Names of every shipped operation, in fixture order.
pub fn builtin_names() -> &'static [&'static str] {
    &[
        "identity",
        "dual",
        "ambo",
        "join",
        "truncate",
        "needle",
        "zip",
        "kis",
        "expand",
        "ortho",
        "chamfer",
        "subdivide",
        "loft",
        "o6a",
        "o6b",
        "bevel",
        "meta",
        "o6d",
        "join-lace",
        "o6e",
        "o6f-do",
        "o6f-od",
        "o6f-dod",
        "quinto",
    ]
}

/// Looks up a shipped operation by name. Derived operations are built from
/// their compositional identities on every call; all of them are small.
pub fn builtin(name: &str) -> Result<OperationPatch, PatchError> {
    let truncate = truncate_patch;
    let ambo = ambo_patch;
    let chamfer = || {
        goldberg::gc_patch(goldberg::GcParams::new(2, 0).unwrap()).expect("chamfer = GC(2,0)")
    };
    Ok(match name {
        "identity" => identity_patch(),
        "dual" => dual_patch(),
        "ambo" => ambo(),
        "join" => ambo().post_dual(),
        "truncate" => truncate(),
        "needle" => truncate().post_dual(),
        "zip" => truncate().pre_dual(),
        "kis" => truncate().pre_dual().post_dual(),
        "expand" => ambo().compose(&ambo())?,
        "ortho" => ambo().compose(&ambo())?.post_dual(),
        "chamfer" => chamfer(),
        "subdivide" => chamfer().pre_dual().post_dual(),
        "loft" => loft_patch(),
        "o6a" => o6a_patch(),
        "o6b" => truncate().compose(&ambo().post_dual())?,
        "bevel" => truncate().compose(&ambo())?,
        "meta" => truncate().compose(&ambo())?.post_dual(),
        "o6d" => o6d_patch(),
        "join-lace" => o6d_patch().pre_dual().post_dual(),
        "o6e" => ambo().compose(&truncate())?,
        "o6f-do" => quinto_patch().post_dual(),
        "o6f-od" => quinto_patch().pre_dual(),
        "o6f-dod" => quinto_patch().pre_dual().post_dual(),
        "quinto" => quinto_patch(),
        other => return Err(PatchError::UnknownBuiltin(other.to_string())),
    })
}
