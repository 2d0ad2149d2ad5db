#include "cli/app.hpp"

int main(int argc, char** argv) { return bj::cli::main(argc, argv); }
