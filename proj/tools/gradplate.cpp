#include "gradplate/cli.hpp"

int main(int argc, char** argv) { return gradplate::run_cli(argc, argv); }
