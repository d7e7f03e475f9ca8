use super::ids::{InvariantId, Stage};

/// Generator triangle: column `i` (1-based) lists slots `(i, 0) .. (i, i-1)` top to bottom.
pub fn generator_table(n: usize, stage: Stage) -> Vec<Vec<InvariantId>> {
    (1..=n).map(|i| (0..i).map(|j| stage.id_at(i, j)).collect()).collect()
}

/// The generators of `stage` in table order.
pub fn stage_generators(n: usize, stage: Stage) -> Vec<InvariantId> {
    generator_table(n, stage).into_iter().flatten().collect()
}

/// `{J_{i,j}}`, the `n(n+1)/2` unitriangular generators.
pub fn u_system(n: usize) -> Vec<InvariantId> {
    stage_generators(n, Stage::Base)
}

/// `{y_n} ∪ {Y_{i,j}}`, the `n(n-1)/2 + 1` Borel generators.
pub fn b_system(n: usize) -> Vec<InvariantId> {
    stage_generators(n, Stage::Final)
        .into_iter()
        .filter(|id| id.kind != super::ids::InvariantKind::LowerY || id.i == n)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(t: &[Vec<InvariantId>]) -> Vec<Vec<String>> {
        t.iter().map(|c| c.iter().map(ToString::to_string).collect()).collect()
    }

    #[test]
    fn small_tables() {
        assert_eq!(names(&generator_table(1, Stage::Base)), [["J:1,0"]]);
        assert_eq!(
            names(&generator_table(2, Stage::Base)),
            vec![vec!["J:1,0"], vec!["J:2,0", "J:2,1"]]
        );
        let flat: Vec<String> = u_system(3).iter().map(ToString::to_string).collect();
        assert_eq!(flat, ["J:1,0", "J:2,0", "J:2,1", "J:3,0", "J:3,1", "J:3,2"]);
        assert_eq!(
            names(&generator_table(3, Stage::Final)),
            vec![vec!["y:1"], vec!["Y:2,0", "y:2"], vec!["Y:3,0", "Y:3,1", "y:3"]]
        );
    }

    #[test]
    fn system_sizes() {
        for n in 1..=7 {
            assert_eq!(u_system(n).len(), n * (n + 1) / 2);
            assert_eq!(b_system(n).len(), n * (n - 1) / 2 + 1);
        }
    }
}
