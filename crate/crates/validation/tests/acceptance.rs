use argnlg_validation::run_all;

#[test]
fn acceptance_criteria() {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.number).collect();
    println!("{} of {} criteria pass", outcomes.len() - failed.len(), outcomes.len());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
