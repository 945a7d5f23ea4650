// Placeholder; the acceptance suite is assembled after the modules land.
int main() { return 0; }
