use std::io::Write;

fn main() {
    let env = std::env::var(enumerlab_cli::BUDGET_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = enumerlab_cli::main_with(
        std::env::args_os(),
        env.as_deref(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
