#include "sivie/cli.hpp"

int main(int argc, char** argv) { return sivie::cli::main_entry(argc, argv); }
