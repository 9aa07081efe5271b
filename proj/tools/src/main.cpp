#include "griess/cli.hpp"

int main(int argc, char** argv) { return griess::cli::run(argc, argv); }
