fn main() {
    println!("biregkit");
}
