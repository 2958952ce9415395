#include "qvac/cli.hpp"

int main(int argc, char** argv) { return qvac::cli::main_entry(argc, argv); }
