#include "qd/cli.hpp"

int main(int argc, char** argv) { return qd::run(argc, argv); }
