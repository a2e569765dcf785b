//! Drives the command-line front end in-process and prints its reports:
//! the same code path as the `lgforge` binary.

use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let runs: Vec<Vec<String>> = vec![
        vec![
            "period".into(),
            "--expr".into(),
            "x+y+1/(x*y)".into(),
            "--vars".into(),
            "x,y".into(),
            "-K".into(),
            "9".into(),
        ],
        vec!["cover".into(), "--spec".into(), format!("{data}/delpezzo_stage1.json")],
        vec![
            "check-weak-lg".into(),
            "--spec".into(),
            format!("{data}/plane.json"),
            "--reference".into(),
            format!("{data}/plane_periods.csv"),
        ],
    ];
    for args in runs {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = lgforge::cli::main_with_args(
            std::iter::once("lgforge".to_string()).chain(args.clone()),
            &mut out,
            &mut err,
        );
        println!("$ lgforge {}", args.join(" "));
        print!("{}", String::from_utf8(out)?);
        if code != 0 {
            return Err(format!("exit {code}: {}", String::from_utf8(err)?).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
