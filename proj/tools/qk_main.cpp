// Placeholder; the CLI lands after the engines.
int main() { return 0; }
