int always_one(void) {
    return 1;
    touch();
}
