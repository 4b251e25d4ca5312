use num_bigint::BigInt;
use num_rational::BigRational;

use qmatroid::catalog::{self, lookup};
use qmatroid::identities::contraction_expansion;
use qmatroid::kontsevich::{
    basis_sum, theorem1, u24_reduced_check, weighted_laplacian, AlphaVector, Theorem1Options,
};
use qmatroid::matroid::char_poly;
use qmatroid::{Budget, Error, Field, Matroid, Result, UniPoly};

pub fn u24(q: u64, budget: Budget) -> Result<bool> {
    let field = Field::with_order(q)?;
    if field.characteristic() == 2 {
        return Err(Error::EvenCharacteristic(q));
    }
    println!("U24 over GF({q}) from the columns (1,0) (0,1) (1,1) (1,-1)");
    let m = catalog::u24(&field)?;
    if q == 3 {
        println!("note: over GF(3) the columns stay pairwise independent (1,-1) = (1,2), so no collapse occurs");
    }
    println!("s(alpha) = a1a2 + a1a3 + a1a4 + a2a3 + a2a4 + 4a3a4");
    for alpha in [[1, 1, 1, 1], [1, 1, 2, 2], [1, 2, 3, 4], [2, 1, 1, 3]] {
        if alpha.iter().any(|&a| a % q as i64 == 0) {
            continue;
        }
        let a = AlphaVector::from_ints(&field, &alpha)?;
        let s = basis_sum(&m, &a)?;
        let l = weighted_laplacian(&m, &a)?;
        println!("  alpha = {alpha:?}: s = {s}, det L = {}, rank L = {}", l.det()?, l.rank());
    }
    let summary = theorem1(
        &m,
        Theorem1Options {
            budget,
            ..Default::default()
        },
    )?;
    let census: Vec<String> = summary
        .rank_histogram()
        .iter()
        .map(|(r, c)| format!("r*={r}: {c}"))
        .collect();
    println!("r* histogram: {}", census.join(", "));
    let expected = char_poly(&m.dual(), budget)?.eval_int(&BigInt::from(q));
    println!("alpha-sum = {}; dual characteristic polynomial at q = {expected}", summary.total);
    let r = u24_reduced_check(&field, budget)?;
    println!(
        "(q\u{2212}1)(q\u{2212}4) = {}; g({q},2)\u{b7}\u{3a3} \u{3b7} = {}",
        r.lhs, r.rhs
    );
    Ok(r.holds() && summary.total == BigRational::from(expected))
}

const C4_TERMS: [&str; 5] = [
    "P_C4(q)",
    "-4(q-1) P_K3(q)",
    "6(q-1)^2 P_K2(q)",
    "-4(q-1)^3 P_(loop)(q)",
    "(q-1)^4 P_K1(q)",
];

pub fn c4(q: i64, budget: Budget) -> Result<bool> {
    if q < 2 {
        return Err(Error::InvalidQ(q));
    }
    let g = lookup("C4")?
        .graph()
        .expect("C4 is a graph");
    let terms = contraction_expansion(&g, budget)?;
    let qr = BigRational::from(BigInt::from(q));
    println!("C4 at q = {q}: sum over spanning subgraphs H of (-1)^(|E|-|E(H)|) (q-1)^|E(H)| P_(G/H)(q)");
    let mut total = BigRational::from(BigInt::from(0));
    for (k, (t, label)) in terms.iter().zip(C4_TERMS).enumerate() {
        let v = t.eval(&qr);
        println!("  |E(H)| = {k}: {label} = {v}");
        total += v;
    }
    let sum: UniPoly = terms.iter().fold(UniPoly::zero(), |a, b| &a + b);
    let flow = g.flow_poly(budget)?;
    let target = &flow * &UniPoly::monomial(BigInt::from(1), g.vertex_count());
    let closed = target.eval(&qr);
    println!("total = {total}");
    println!("(q-1)q^4 = {closed}");
    println!(
        "as polynomials: {} {} q^4 F_C4(q)",
        sum.display_with("q"),
        if sum == target { "=" } else { "!=" }
    );
    Ok(total == closed && sum == target)
}
