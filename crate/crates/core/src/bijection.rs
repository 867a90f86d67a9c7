//! The correspondence between sp(2n)-standard shifted tableaux and μ-UASMs:
//! a tableau is read diagonal by diagonal into a sign matrix, which is then
//! decoded into a μ-UASM.

use crate::combinat::StrictPartition;
use crate::error::{Error, Result};
use crate::tableaux::{Level, ShiftedTableau};
use crate::uasm::{label_of, phi, phi_inv, row_of, validate_uasm, MuUasm, Sign, SignatureMatrix};

/// Row labelled `e` has `+` in column `q` iff the strip of `e` meets diagonal `q`.
pub fn psi(st: &ShiftedTableau) -> SignatureMatrix {
    let n = st.n();
    let m = st.shape().largest();
    let mut cells = vec![vec![Sign::Minus; m]; 2 * n];
    for ((i, j), e) in st.boxes() {
        cells[row_of(n, e)][j - i] = Sign::Plus;
    }
    SignatureMatrix { cells }
}

/// Rebuilds the tableau: the number of `+` in column `q` is the length of
/// diagonal `q`, which is filled top to bottom with the labels of those rows
/// in increasing order.
pub fn psi_inv(sm: &SignatureMatrix, n: usize) -> Result<ShiftedTableau> {
    if sm.rows() != 2 * n || sm.cells.iter().any(|r| r.len() != sm.cols()) {
        return Err(Error::Malformed(format!("expected {} rows of equal length", 2 * n)));
    }
    let m = sm.cols();
    if m == 0 {
        return Err(Error::Malformed("sign matrix has no columns".into()));
    }
    let diagonals: Vec<Vec<Level>> = (0..m)
        .map(|q| {
            let mut labels: Vec<Level> =
                (0..2 * n).filter(|&r| sm.cells[r][q] == Sign::Plus).map(|r| label_of(n, r)).collect();
            labels.sort();
            labels
        })
        .collect();
    let counts: Vec<usize> = diagonals.iter().map(Vec::len).collect();
    if counts[0] != n {
        return Err(Error::Malformed(format!("column 1 has {} plus signs, expected n = {n}", counts[0])));
    }
    let mut parts = Vec::new();
    for q in 0..m {
        let next = counts.get(q + 1).copied().unwrap_or(0);
        if counts[q] == 0 {
            return Err(Error::Malformed(format!("column {} is empty inside the frame", q + 1)));
        }
        if next + 1 == counts[q] {
            parts.push(q + 1);
        } else if next != counts[q] {
            return Err(Error::Malformed(format!(
                "columns {} and {} hold {} and {next} plus signs; diagonals must keep or lose one box",
                q + 1,
                q + 2,
                counts[q]
            )));
        }
    }
    parts.reverse();
    let shape = StrictPartition::new(parts)?;
    let mut rows: Vec<Vec<Level>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    // box (i, j) lies on diagonal j - i + 1; filling row by row visits each
    // diagonal top to bottom
    for (r, row) in rows.iter_mut().enumerate() {
        row.extend(diagonals[..shape.parts()[r]].iter().map(|d| d[r]));
    }
    let st = ShiftedTableau::new_unchecked(shape, n, rows);
    st.validate().into_result()?;
    Ok(st)
}

/// `phi_inv . psi`, checked to land on a valid μ-UASM.
pub fn big_psi(st: &ShiftedTableau) -> Result<MuUasm> {
    st.validate().into_result()?;
    let cells = phi_inv(&psi(st));
    let report = validate_uasm(&cells, st.shape(), st.n());
    if !report.is_valid() {
        return Err(Error::Invariant(format!("image of a valid tableau is not a mu-UASM: {report}")));
    }
    MuUasm::new(st.shape().clone(), st.n(), cells)
}

/// `psi_inv . phi`, checked to land on a valid shifted tableau.
pub fn big_psi_inv(ua: &MuUasm) -> Result<ShiftedTableau> {
    ua.validate().into_result()?;
    let st = psi_inv(&phi(ua), ua.n())
        .map_err(|e| Error::Invariant(format!("preimage of a valid mu-UASM is not a tableau: {e}")))?;
    if st.shape() != ua.mu() {
        return Err(Error::Invariant(format!("preimage has shape {}, expected {}", st.shape(), ua.mu())));
    }
    Ok(st)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tableaux::{generate_shifted, levels};

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    fn single(e: i32) -> ShiftedTableau {
        ShiftedTableau::new(sp(&[1]), 1, vec![levels(&[e]).unwrap()]).unwrap()
    }

    #[test]
    fn running_example_chain() {
        let st = fixtures::running_tableau();
        assert_eq!(psi(&st), fixtures::running_signature());
        assert_eq!(psi_inv(&fixtures::running_signature(), 5).unwrap(), st);
        assert_eq!(big_psi(&st).unwrap(), fixtures::running_uasm());
        assert_eq!(big_psi_inv(&fixtures::running_uasm()).unwrap(), st);
    }

    #[test]
    fn single_boxes() {
        let plus = SignatureMatrix::from_strs(&["+", "-"]).unwrap();
        let minus = SignatureMatrix::from_strs(&["-", "+"]).unwrap();
        assert_eq!(psi(&single(1)), plus);
        assert_eq!(psi(&single(-1)), minus);
        assert_eq!(psi_inv(&plus, 1).unwrap(), single(1));
        assert_eq!(big_psi(&single(1)).unwrap().cells(), &[vec![1], vec![0]]);
        assert_eq!(big_psi(&single(-1)).unwrap().cells(), &[vec![0], vec![1]]);
    }

    #[test]
    fn bad_frames() {
        let gap = SignatureMatrix::from_strs(&["+-", "--"]).unwrap();
        assert!(matches!(psi_inv(&gap, 1), Err(Error::Malformed(_))));
        let wide = SignatureMatrix::from_strs(&["++", "++"]).unwrap();
        assert!(matches!(psi_inv(&wide, 1), Err(Error::Malformed(_))));
        assert!(matches!(psi_inv(&gap, 2), Err(Error::Malformed(_))));
    }

    #[test]
    fn round_trip_on_small_shape() {
        let all = generate_shifted(&sp(&[2, 1]), 2).unwrap();
        assert_eq!(all.len(), 12);
        for st in all {
            assert_eq!(big_psi_inv(&big_psi(&st).unwrap()).unwrap(), st);
        }
    }
}
