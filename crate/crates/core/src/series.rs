//! Known infinite series of exceptional schemes and their tagging.
//!
//! Each template describes the fiber multiset of one series member; a scheme
//! is tagged when its fibers match a template up to order. Small-degree
//! members of different series may coincide (degree 2 is simultaneously
//! cyclic, dihedral and Chebyshev); all matching tags are reported.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::partition::Partition;
use crate::scheme::Scheme;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesTag {
    /// `[n][n][1^n]`, the covering `z -> z^n`.
    Cyclic { n: usize },
    /// `[p,p][2^p][2^p]` of degree `2p`, the covering `z -> z^p + z^{-p}`
    /// after normalization.
    Dihedral { p: usize },
    /// Chebyshev polynomials: odd `n` gives `[n][1,2^{(n-1)/2}][1,2^{(n-1)/2}]`,
    /// even `n` gives `[n][1,1,2^{(n-2)/2}][2^{n/2}]`.
    Chebyshev { n: usize },
    /// The series interpolating between Chebyshev and dihedral:
    /// `[p,q][2^{(n-3)/2},3][1,2^{(n-1)/2}]` for odd `n = p+q`,
    /// `[p,q][1,2^{(n-4)/2},3][2^{n/2}]` for even `n`; `alpha = (q+p)/(q-p)`.
    Interpolating {
        p: usize,
        q: usize,
        alpha: BigRational,
    },
    /// Odd-degree series `[1,p,p][2^{p-1},3][2^{p-1},3]` of degree `2p+1`.
    OddSeries { p: usize },
    /// `[2,p,p][3,3,2^{p-2}][2^{p+1}]` of degree `2p+2`.
    TwoPPSeries { p: usize },
    /// The tetrahedron: `[3,3,3,3][3,3,3,3][2^6]` of degree 12.
    Tetrahedral,
}

impl fmt::Display for SeriesTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesTag::Cyclic { n } => write!(f, "Cyclic({n})"),
            SeriesTag::Dihedral { p } => write!(f, "Dihedral({p})"),
            SeriesTag::Chebyshev { n } => write!(f, "Chebyshev({n})"),
            SeriesTag::Interpolating { p, q, alpha } => {
                write!(f, "Interpolating({p},{q};alpha={alpha})")
            }
            SeriesTag::OddSeries { p } => write!(f, "OddSeries({p})"),
            SeriesTag::TwoPPSeries { p } => write!(f, "TwoPPSeries({p})"),
            SeriesTag::Tetrahedral => write!(f, "Tetrahedral"),
        }
    }
}

fn twos(count: usize) -> Vec<usize> {
    vec![2; count]
}

fn with(mut base: Vec<usize>, extra: &[usize]) -> Partition {
    base.extend_from_slice(extra);
    Partition::new(base)
}

/// `[n][n][1^n]`.
pub fn cyclic_scheme(n: usize) -> Scheme {
    assert!(n >= 1);
    Scheme::three(
        Partition::single(n),
        Partition::single(n),
        Partition::all_ones(n),
    )
    .unwrap()
}

/// `[p,p][2^p][2^p]`, degree `2p`.
pub fn dihedral_scheme(p: usize) -> Scheme {
    assert!(p >= 1);
    Scheme::three(
        Partition::new(vec![p, p]),
        Partition::new(twos(p)),
        Partition::new(twos(p)),
    )
    .unwrap()
}

/// The Chebyshev scheme of degree `n`.
pub fn chebyshev_scheme(n: usize) -> Scheme {
    assert!(n >= 1);
    let (zero, one) = if !n.is_multiple_of(2) {
        (with(twos((n - 1) / 2), &[1]), with(twos((n - 1) / 2), &[1]))
    } else {
        (
            with(twos((n - 2) / 2), &[1, 1]),
            Partition::new(twos(n / 2)),
        )
    };
    Scheme::three(Partition::single(n), zero, one).unwrap()
}

/// The interpolating scheme with pole orders `p < q`, degree `n = p + q`.
pub fn interpolating_scheme(p: usize, q: usize) -> Scheme {
    assert!(p >= 1 && q > p);
    let n = p + q;
    let (zero, one) = if !n.is_multiple_of(2) {
        (with(twos((n - 3) / 2), &[3]), with(twos((n - 1) / 2), &[1]))
    } else {
        (
            with(twos((n - 4) / 2), &[1, 3]),
            Partition::new(twos(n / 2)),
        )
    };
    Scheme::three(Partition::new(vec![q, p]), zero, one).unwrap()
}

/// `[1,p,p][2^{p-1},3][2^{p-1},3]`, degree `2p+1`.
pub fn odd_series_scheme(p: usize) -> Scheme {
    assert!(p >= 1);
    Scheme::three(
        Partition::new(vec![p, p, 1]),
        with(twos(p - 1), &[3]),
        with(twos(p - 1), &[3]),
    )
    .unwrap()
}

/// `[2,p,p][3,3,2^{p-2}][2^{p+1}]`, degree `2p+2`.
pub fn two_pp_scheme(p: usize) -> Scheme {
    assert!(p >= 2);
    Scheme::three(
        Partition::new(vec![p, p, 2]),
        with(twos(p - 2), &[3, 3]),
        Partition::new(twos(p + 1)),
    )
    .unwrap()
}

/// `[3,3,3,3][3,3,3,3][2^6]`, degree 12.
pub fn tetrahedral_scheme() -> Scheme {
    Scheme::three(
        Partition::new(vec![3; 4]),
        Partition::new(vec![3; 4]),
        Partition::new(twos(6)),
    )
    .unwrap()
}

/// All series tags matching `s`, compared up to fiber order. Deterministic
/// order: by series, then by parameters.
pub fn series_tags(s: &Scheme) -> Vec<SeriesTag> {
    let mut tags = Vec::new();
    if s.fiber_count() != 3 {
        return tags;
    }
    let canon = s.canonical();
    let n = s.degree();
    let matches = |t: &Scheme| t.canonical() == canon;

    if matches(&cyclic_scheme(n)) {
        tags.push(SeriesTag::Cyclic { n });
    }
    if n.is_multiple_of(2) && n >= 2 && matches(&dihedral_scheme(n / 2)) {
        tags.push(SeriesTag::Dihedral { p: n / 2 });
    }
    if matches(&chebyshev_scheme(n)) {
        tags.push(SeriesTag::Chebyshev { n });
    }
    for p in 1..=(n.saturating_sub(1)) / 2 {
        let q = n - p;
        if q > p && matches(&interpolating_scheme(p, q)) {
            let alpha = BigRational::new(BigInt::from(q + p), BigInt::from(q - p));
            tags.push(SeriesTag::Interpolating { p, q, alpha });
        }
    }
    if !n.is_multiple_of(2) && n >= 3 {
        let p = (n - 1) / 2;
        if matches(&odd_series_scheme(p)) {
            tags.push(SeriesTag::OddSeries { p });
        }
    }
    if n.is_multiple_of(2) && n >= 6 {
        let p = (n - 2) / 2;
        if matches(&two_pp_scheme(p)) {
            tags.push(SeriesTag::TwoPPSeries { p });
        }
    }
    if n == 12 && matches(&tetrahedral_scheme()) {
        tags.push(SeriesTag::Tetrahedral);
    }
    tags
}

/// Every series instance of the given degree, with its scheme.
pub fn series_instances(degree: usize) -> Vec<(SeriesTag, Scheme)> {
    let n = degree;
    let mut out = Vec::new();
    if n >= 1 {
        out.push((SeriesTag::Cyclic { n }, cyclic_scheme(n)));
        out.push((SeriesTag::Chebyshev { n }, chebyshev_scheme(n)));
    }
    if n >= 2 && n.is_multiple_of(2) {
        out.push((SeriesTag::Dihedral { p: n / 2 }, dihedral_scheme(n / 2)));
    }
    for p in 1..=n.saturating_sub(1) / 2 {
        let q = n - p;
        if q > p {
            let alpha = BigRational::new(BigInt::from(q + p), BigInt::from(q - p));
            out.push((
                SeriesTag::Interpolating { p, q, alpha },
                interpolating_scheme(p, q),
            ));
        }
    }
    if !n.is_multiple_of(2) && n >= 3 {
        let p = (n - 1) / 2;
        out.push((SeriesTag::OddSeries { p }, odd_series_scheme(p)));
    }
    if n.is_multiple_of(2) && n >= 6 {
        let p = (n - 2) / 2;
        out.push((SeriesTag::TwoPPSeries { p }, two_pp_scheme(p)));
    }
    if n == 12 {
        out.push((SeriesTag::Tetrahedral, tetrahedral_scheme()));
    }
    out
}
