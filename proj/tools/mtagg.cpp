#include "mtagg/cli/app.hpp"

int main(int argc, char** argv) { return mtagg::cli::run_cli(argc, argv); }
