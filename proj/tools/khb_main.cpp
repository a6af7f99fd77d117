#include "khb/cli.hpp"

int main(int argc, char** argv) { return khb::cli::run(argc, argv); }
