//! Local growth rules on a square of weights.
//!
//! A square has corners SW = lambda, NW = nu, NE = mu, SE = rho, with nu the
//! common "past" of lambda and mu. The affine rule computes
//! `rho = sort(lambda + mu - nu)` whenever lambda and mu both differ from nu
//! by a minuscule displacement, and refuses inputs where that fails or where
//! the output would not again differ minusculely from lambda and mu.
//!
//! The classical Fomin rules (row and column versions) and the two-box
//! jeu-de-taquin rule are the partition-shaped degenerations used by the
//! Robinson-Schensted and promotion machinery.

use crate::weights::{sort_desc, GlWeight, Int, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocalRuleError {
    #[error("weights have different ranks")]
    RankMismatch,
    #[error("{side} corner does not differ from nu by a minuscule displacement")]
    NotMinusculeStep { side: &'static str },
    #[error("sorted output does not differ minusculely from the inputs")]
    InvalidSquare,
    #[error("corners do not bound a Fomin square: {0}")]
    BadFominSquare(&'static str),
    #[error("a marked square must have lambda = mu = nu")]
    MarkedNonConstant,
    #[error("corners do not bound a two-box jeu-de-taquin square")]
    BadJdtSquare,
}

/// A difference of dominant weights that could label one minuscule step:
/// entrywise 0/1 (fundamental) or 0/-1 (dual), not identically zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Displacement {
    pub is_dual: bool,
    pub ones: usize,
}

/// Classifies `to - from` as a minuscule displacement, if it is one.
pub fn displacement(from: &GlWeight, to: &GlWeight) -> Option<Displacement> {
    if from.rank() != to.rank() {
        return None;
    }
    let mut pos = 0usize;
    let mut neg = 0usize;
    for (f, t) in from.entries().iter().zip(to.entries()) {
        match t - f {
            0 => {}
            1 => pos += 1,
            -1 => neg += 1,
            _ => return None,
        }
    }
    match (pos, neg) {
        (0, 0) => None,
        (p, 0) => Some(Displacement {
            is_dual: false,
            ones: p,
        }),
        (0, n) => Some(Displacement {
            is_dual: true,
            ones: n,
        }),
        _ => None,
    }
}

fn sorted_combination(lambda: &GlWeight, mu: &GlWeight, nu: &GlWeight) -> GlWeight {
    let entries: Vec<Int> = lambda
        .entries()
        .iter()
        .zip(mu.entries())
        .zip(nu.entries())
        .map(|((&l, &m), &n)| l + m - n)
        .collect();
    GlWeight::new(sort_desc(entries)).expect("sorted vector is weakly decreasing")
}

/// The affine local rule: `rho = sort(lambda + mu - nu)`.
///
/// Both lambda and mu must differ from nu by a minuscule displacement, and
/// the result must differ minusculely from both of them (with the types
/// crossing over: rho - mu matches nu -> lambda and rho - lambda matches
/// nu -> mu); otherwise the square is invalid.
pub fn affine_rule(
    lambda: &GlWeight,
    mu: &GlWeight,
    nu: &GlWeight,
) -> Result<GlWeight, LocalRuleError> {
    if lambda.rank() != nu.rank() || mu.rank() != nu.rank() {
        return Err(LocalRuleError::RankMismatch);
    }
    let west = displacement(nu, lambda)
        .ok_or(LocalRuleError::NotMinusculeStep { side: "lambda" })?;
    let north =
        displacement(nu, mu).ok_or(LocalRuleError::NotMinusculeStep { side: "mu" })?;
    let rho = sorted_combination(lambda, mu, nu);
    let east = displacement(mu, &rho).ok_or(LocalRuleError::InvalidSquare)?;
    let south = displacement(lambda, &rho).ok_or(LocalRuleError::InvalidSquare)?;
    if east != west || south != north {
        return Err(LocalRuleError::InvalidSquare);
    }
    Ok(rho)
}

/// The inverse rule: recovers `nu = sort(lambda + mu - rho)` from the other
/// three corners, with the mirror-image validity checks.
pub fn affine_rule_reverse(
    lambda: &GlWeight,
    mu: &GlWeight,
    rho: &GlWeight,
) -> Result<GlWeight, LocalRuleError> {
    if lambda.rank() != rho.rank() || mu.rank() != rho.rank() {
        return Err(LocalRuleError::RankMismatch);
    }
    let south = displacement(lambda, rho)
        .ok_or(LocalRuleError::NotMinusculeStep { side: "lambda" })?;
    let east =
        displacement(mu, rho).ok_or(LocalRuleError::NotMinusculeStep { side: "mu" })?;
    let nu = sorted_combination(lambda, mu, rho);
    let west = displacement(&nu, lambda).ok_or(LocalRuleError::InvalidSquare)?;
    let north = displacement(&nu, mu).ok_or(LocalRuleError::InvalidSquare)?;
    if east != west || south != north {
        return Err(LocalRuleError::InvalidSquare);
    }
    Ok(nu)
}

fn fomin_preconditions(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    marked: bool,
) -> Result<(), LocalRuleError> {
    for (name, bigger) in [("mu", mu), ("nu", nu)] {
        if !bigger.contains(lambda) {
            return Err(LocalRuleError::BadFominSquare(name));
        }
        if bigger.size() - lambda.size() > 1 {
            return Err(LocalRuleError::BadFominSquare(name));
        }
    }
    if marked && !(lambda == mu && lambda == nu) {
        return Err(LocalRuleError::MarkedNonConstant);
    }
    Ok(())
}

/// Fomin's row growth rule on a square of partitions.
///
/// - If mu != nu, the result is their union.
/// - If lambda differs from mu = nu by a box in row i, a box is added in
///   row i+1.
/// - If all three agree, the result is lambda, or lambda plus a box in the
///   first row when the square is marked.
pub fn fomin_forward(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    marked: bool,
) -> Result<Partition, LocalRuleError> {
    fomin_preconditions(lambda, mu, nu, marked)?;
    if mu != nu {
        return Ok(mu.union(nu));
    }
    if lambda != mu {
        let (row, _) = mu.skew_cells(lambda).expect("checked containment")[0];
        return Ok(mu
            .with_box_in_row(row + 1)
            .expect("box below an added box keeps a partition shape"));
    }
    if marked {
        return Ok(lambda
            .with_box_in_row(0)
            .expect("first row always extends"));
    }
    Ok(lambda.clone())
}

fn with_box_in_col(p: &Partition, col: usize) -> Option<Partition> {
    // The unique row in which column `col` (0-based) can grow.
    let row = p.col_height(col);
    let grown = p.with_box_in_row(row).ok()?;
    (grown.part(row) == col as Int + 1).then_some(grown)
}

/// The column (transposed) version of Fomin's growth rule: identical except
/// that boxes propagate along columns, and a marked constant square adds a
/// box in the first column.
pub fn fomin_transpose(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    marked: bool,
) -> Result<Partition, LocalRuleError> {
    fomin_preconditions(lambda, mu, nu, marked)?;
    if mu != nu {
        return Ok(mu.union(nu));
    }
    if lambda != mu {
        let (_, col) = mu.skew_cells(lambda).expect("checked containment")[0];
        return Ok(with_box_in_col(mu, col + 1)
            .expect("box right of an added box keeps a partition shape"));
    }
    if marked {
        return Ok(with_box_in_col(lambda, 0).expect("first column always extends"));
    }
    Ok(lambda.clone())
}

/// The two-box jeu-de-taquin rule: given nu < lambda < mu with one box added
/// at each step, returns lambda itself when mu/nu is a domino, and otherwise
/// the unique other partition strictly between nu and mu.
pub fn jdt_rule(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Partition, LocalRuleError> {
    let ok = lambda.contains(nu)
        && mu.contains(lambda)
        && lambda.size() == nu.size() + 1
        && mu.size() == lambda.size() + 1;
    if !ok {
        return Err(LocalRuleError::BadJdtSquare);
    }
    let cells = mu.skew_cells(nu).expect("nu inside mu");
    debug_assert_eq!(cells.len(), 2);
    let middles: Vec<Partition> = cells
        .iter()
        .filter_map(|&(row, _)| nu.with_box_in_row(row).ok())
        .filter(|p| mu.contains(p))
        .collect();
    match middles.as_slice() {
        [only] => {
            // mu/nu is a domino; the only middle must be the given lambda.
            if only != lambda {
                return Err(LocalRuleError::BadJdtSquare);
            }
            Ok(lambda.clone())
        }
        [a, b] => {
            if a == lambda {
                Ok(b.clone())
            } else if b == lambda {
                Ok(a.clone())
            } else {
                Err(LocalRuleError::BadJdtSquare)
            }
        }
        _ => Err(LocalRuleError::BadJdtSquare),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{pieri_neighbors, MinusculeLabel};

    fn w(entries: &[Int]) -> GlWeight {
        GlWeight::new(entries.to_vec()).unwrap()
    }

    fn p(parts: &[Int]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn affine_rule_worked_example() {
        let rho = affine_rule(
            &w(&[3, 3, 1, 1, 1]),
            &w(&[4, 2, 2, 1, 0]),
            &w(&[4, 3, 2, 2, 1]),
        )
        .unwrap();
        assert_eq!(rho, w(&[3, 2, 1, 0, 0]));
    }

    #[test]
    fn affine_rule_rank_one() {
        assert_eq!(affine_rule(&w(&[0]), &w(&[2]), &w(&[1])).unwrap(), w(&[1]));
    }

    #[test]
    fn affine_rule_needs_sorting() {
        let rho = affine_rule(&w(&[1, 0, 0]), &w(&[1, 0, 0]), &w(&[1, 1, 0])).unwrap();
        assert_eq!(rho, w(&[1, 0, -1]));
    }

    #[test]
    fn affine_rule_rejects_bad_inputs() {
        // mu two steps away from nu.
        assert!(affine_rule(&w(&[1, 0]), &w(&[3, 1]), &w(&[1, 1])).is_err());
        // mixed-sign difference.
        assert!(affine_rule(&w(&[1, 0]), &w(&[2, 0]), &w(&[1, 1])).is_err());
        assert!(affine_rule(&w(&[1, 0]), &w(&[1, 0]), &w(&[1, 0])).is_err());
    }

    #[test]
    fn affine_rule_is_symmetric_and_reversible() {
        let nus = [w(&[0, 0, 0]), w(&[2, 1, 0]), w(&[2, 0, -1])];
        for nu in &nus {
            for j in 1..=3usize {
                for k in 1..=3usize {
                    for l1 in [MinusculeLabel::fund(j), MinusculeLabel::dual_of(j)] {
                        for l2 in [MinusculeLabel::fund(k), MinusculeLabel::dual_of(k)] {
                            for lambda in pieri_neighbors(nu, l1) {
                                for mu in pieri_neighbors(nu, l2) {
                                    let rho = affine_rule(&lambda, &mu, nu).unwrap();
                                    assert_eq!(
                                        rho,
                                        affine_rule(&mu, &lambda, nu).unwrap(),
                                        "rule must be symmetric in lambda, mu"
                                    );
                                    assert_eq!(
                                        affine_rule_reverse(&lambda, &mu, &rho).unwrap(),
                                        *nu,
                                        "reverse rule must recover nu"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fomin_forward_cases() {
        // Differing arms take the union.
        assert_eq!(
            fomin_forward(&p(&[1]), &p(&[2]), &p(&[1, 1]), false).unwrap(),
            p(&[2, 1])
        );
        // Equal arms above lambda: box moves down one row.
        assert_eq!(
            fomin_forward(&p(&[1]), &p(&[2]), &p(&[2]), false).unwrap(),
            p(&[2, 1])
        );
        // Constant square: fixed unless marked.
        assert_eq!(
            fomin_forward(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1]), false).unwrap(),
            p(&[2, 1])
        );
        assert_eq!(
            fomin_forward(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1]), true).unwrap(),
            p(&[3, 1])
        );
        assert!(fomin_forward(&p(&[1]), &p(&[2]), &p(&[2]), true).is_err());
        assert!(fomin_forward(&p(&[2]), &p(&[1]), &p(&[2]), false).is_err());
    }

    #[test]
    fn fomin_transpose_cases() {
        // Box in column 0 of mu = nu moves right one column.
        assert_eq!(
            fomin_transpose(&p(&[1]), &p(&[1, 1]), &p(&[1, 1]), false).unwrap(),
            p(&[2, 1])
        );
        // Marked constant square grows the first column.
        assert_eq!(
            fomin_transpose(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1]), true).unwrap(),
            p(&[2, 1, 1])
        );
    }

    #[test]
    fn fomin_transpose_is_conjugated_forward() {
        // The defining identity: transposing inputs and output of the row
        // rule gives the column rule. Checked over all small squares.
        let mut shapes = Vec::new();
        for a in 0..=3 {
            for b in 0..=a.min(2) {
                for c in 0..=b.min(2) {
                    shapes.push(p(&[a, b, c]));
                }
            }
        }
        for lambda in &shapes {
            let mut ups: Vec<Partition> = vec![lambda.clone()];
            for row in 0..=lambda.len() {
                if let Ok(q) = lambda.with_box_in_row(row) {
                    ups.push(q);
                }
            }
            for mu in &ups {
                for nu in &ups {
                    for marked in [false, true] {
                        let direct = fomin_transpose(lambda, mu, nu, marked);
                        let conjugated = fomin_forward(
                            &lambda.conjugate(),
                            &mu.conjugate(),
                            &nu.conjugate(),
                            marked,
                        )
                        .map(|r| r.conjugate());
                        match (direct, conjugated) {
                            (Ok(d), Ok(c)) => assert_eq!(d, c),
                            (Err(_), Err(_)) => {}
                            (d, c) => panic!("mismatch: {d:?} vs {c:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn jdt_rule_cases() {
        // Domino: rho = lambda.
        assert_eq!(
            jdt_rule(&p(&[1]), &p(&[2]), &Partition::empty()).unwrap(),
            p(&[1])
        );
        assert_eq!(
            jdt_rule(&p(&[1]), &p(&[1, 1]), &Partition::empty()).unwrap(),
            p(&[1])
        );
        // Separated boxes: rho is the other middle.
        assert_eq!(
            jdt_rule(&p(&[2, 1]), &p(&[2, 1, 1]), &p(&[1, 1])).unwrap(),
            p(&[1, 1, 1])
        );
        assert_eq!(
            jdt_rule(&p(&[1, 1, 1]), &p(&[2, 1, 1]), &p(&[1, 1])).unwrap(),
            p(&[2, 1])
        );
        assert!(jdt_rule(&p(&[2]), &p(&[2, 1]), &Partition::empty()).is_err());
    }
}
