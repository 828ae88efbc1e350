use clap::Parser;

use morava::{run, Cli};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("MORAVA_LOG", "warn")).init();
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code as i32);
}
