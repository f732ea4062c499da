#include "accuscore/cli.h"

int main(int argc, char **argv) { return accuscore::Main(argc, argv); }
