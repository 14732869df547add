//! Audit of the catalog of known 3-folds in P^5: linkage relations,
//! K-products and Hodge bookkeeping for every row.

use codim2::invariants::{catalog, catalog_audit, Verdict};

fn main() {
    let rep = catalog_audit(&catalog());
    print!("{}", rep.render());
    println!(
        "{} pass, {} fail, {} flagged; {} edges pass both relations",
        rep.count(Verdict::Pass),
        rep.count(Verdict::Fail),
        rep.count(Verdict::Flagged),
        rep.passing_edges()
    );
}
